#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "conset/approx.hpp"
#include "conset/classify.hpp"
#include "conset/comb_solver.hpp"
#include "conset/consistency.hpp"
#include "conset/generators.hpp"
#include "conset/graph.hpp"
#include "conset/oracle.hpp"
#include "conset/path_solver.hpp"
#include "conset/reductions.hpp"
#include "conset/spider_solver.hpp"
#include "conset/tree_solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

// Thrown for command-line combinations that can never work, as opposed to
// bad input data.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using nlohmann::ordered_json;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + output_path);
  out << text;
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad vertex id '" + tok + "'");
    ids.push_back(v);
  }
  if (ids.empty()) throw std::invalid_argument("empty id list");
  return ids;
}

std::string witness_text(const std::vector<int>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

struct SolveArgs {
  std::string input, output;
  std::string problem = "mscs";
  std::string cls = "auto";
  bool verify = false;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  conset::ColoredGraph g = conset::ColoredGraph::load_file(a.input);
  g.validate();
  if (!g.is_connected()) throw std::invalid_argument("instance must be connected");

  auto t0 = std::chrono::steady_clock::now();
  conset::SolveResult result;
  std::string algorithm;

  if (a.problem == "mcs" || a.problem == "mcss") {
    if (a.cls != "auto" && a.cls != "brute")
      throw UsageError("only the exhaustive solver handles " + a.problem +
                       "; drop --class or pass --class brute");
    result = a.problem == "mcs" ? conset::brute_mcs(g) : conset::brute_mcss(g);
    algorithm = "exhaustive";
  } else if (a.problem == "mscs") {
    conset::GraphClass cls;
    if (a.cls == "auto") {
      cls = conset::classify(g);
    } else if (a.cls == "brute") {
      cls = conset::GraphClass::General;  // forced fallthrough to the oracle
    } else {
      auto forced = conset::class_from_name(a.cls);
      if (!forced) throw UsageError("unknown class '" + a.cls + "'");
      conset::GraphClass actual = conset::classify(g);
      // forcing a class only narrows: the instance must really be one
      bool member = false;
      switch (*forced) {
        case conset::GraphClass::Path: member = conset::path_structure(g).has_value(); break;
        case conset::GraphClass::Cycle: member = conset::cycle_structure(g).has_value(); break;
        case conset::GraphClass::Spider: member = conset::spider_structure(g).has_value(); break;
        case conset::GraphClass::Comb: member = conset::comb_structure(g).has_value(); break;
        case conset::GraphClass::Tree: member = conset::is_tree(g); break;
        case conset::GraphClass::General: member = true; break;
      }
      if (!member)
        throw std::invalid_argument("instance is classified as " + conset::class_name(actual) +
                                    ", not " + a.cls);
      cls = *forced;
    }

    if (g.weighted()) {
      bool tree_shaped = conset::is_tree(g);
      if (a.cls != "auto" && a.cls != "brute" && a.cls != "tree")
        throw UsageError("the " + a.cls +
                         " solver is unweighted; weighted tree-shaped instances take "
                         "--class tree or auto");
      if (a.cls != "brute" && tree_shaped) {
        result = conset::solve_mscs_tree_weighted(g);
        algorithm = "tree-dp";
      } else {
        if (a.cls == "auto")
          std::cerr << "note: no polynomial solver covers weighted "
                    << conset::class_name(cls) << " instances; running the exhaustive one\n";
        result = conset::brute_mscs(g);
        algorithm = "exhaustive";
      }
    } else {
      switch (a.cls == "brute" ? conset::GraphClass::General : cls) {
        case conset::GraphClass::Path:
          result = conset::solve_mscs_path(g);
          algorithm = "path-overlay";
          break;
        case conset::GraphClass::Cycle:
          result = conset::solve_mscs_cycle(g);
          algorithm = "cycle-cuts";
          break;
        case conset::GraphClass::Spider:
          result = conset::solve_mscs_spider(g);
          algorithm = "spider-legs";
          break;
        case conset::GraphClass::Comb:
          result = conset::solve_mscs_comb(g);
          algorithm = "comb-tables";
          break;
        case conset::GraphClass::Tree:
          result = conset::solve_mscs_tree(g);
          algorithm = "tree-dp";
          break;
        case conset::GraphClass::General:
          if (a.cls == "auto")
            std::cerr << "note: no polynomial solver covers general graphs; "
                         "running the exhaustive one\n";
          result = conset::brute_mscs(g);
          algorithm = "exhaustive";
          break;
      }
    }
  } else {
    throw UsageError("unknown problem '" + a.problem + "'");
  }

  double ms = elapsed_ms(t0);

  bool verified = true;
  if (a.verify) {
    conset::VerifyReport rep =
        a.problem == "mcs"    ? conset::verify_cs(g, result.witness)
        : a.problem == "mscs" ? conset::verify_scs(g, result.witness)
                              : conset::verify_css(g, result.witness);
    verified = rep.ok;
  }

  if (a.json) {
    ordered_json j;
    j["problem"] = a.problem;
    j["algorithm"] = algorithm;
    j["size"] = result.size();
    j["witness"] = result.witness;
    if (a.verify) j["verified"] = verified;
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::ostringstream out;
    out << "problem: " << a.problem << "\n"
        << "algorithm: " << algorithm << "\n"
        << "size: " << result.size() << "\n"
        << "witness: " << witness_text(result.witness) << "\n";
    if (a.verify) out << "verified: " << (verified ? "yes" : "NO") << "\n";
    emit(out.str(), a.output);
  }
  std::cerr << "wall_ms " << ms << "\n";
  return verified ? kExitOk : kExitVerifyFail;
}

struct VerifyArgs {
  std::string input, output, subset, mode = "scs";
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  conset::ColoredGraph g = conset::ColoredGraph::load_file(a.input);
  g.validate();
  std::vector<int> S = parse_id_list(a.subset);
  conset::Rule rule;
  if (a.mode == "cs")
    rule = conset::Rule::Consistent;
  else if (a.mode == "scs")
    rule = conset::Rule::Strict;
  else if (a.mode == "css")
    rule = conset::Rule::CoveringConsistent;
  else
    throw UsageError("mode must be cs, scs or css");

  conset::VerifyReport rep = conset::verify_set(g, S, rule);

  if (a.json) {
    ordered_json j;
    j["mode"] = a.mode;
    j["holds"] = rep.ok;
    j["violations"] = ordered_json::array();
    for (const auto& v : rep.violations) {
      ordered_json jv;
      jv["vertex"] = v.vertex;
      jv["nearest"] = v.nearest;
      jv["reason"] = v.reason;
      j["violations"].push_back(jv);
    }
    j["missed_blocks"] = rep.missed_blocks;
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::ostringstream out;
    out << (rep.ok ? "holds" : "fails") << "\n";
    for (const auto& v : rep.violations)
      out << "violation at vertex " << v.vertex << ": " << v.reason << " (nearest: "
          << witness_text(v.nearest) << ")\n";
    if (!rep.missed_blocks.empty())
      out << "blocks without a member: " << witness_text(rep.missed_blocks) << "\n";
    emit(out.str(), a.output);
  }
  return rep.ok ? kExitOk : kExitVerifyFail;
}

struct ReduceArgs {
  std::string kind, input, output;
  bool certify = false;
  int anchors = -1;
  int cap = conset::kDefaultOracleCap;
};

int run_reduce(const ReduceArgs& a) {
  if (a.output.empty()) throw UsageError("reduce needs --output");
  ordered_json meta;
  meta["reduction"] = a.kind;
  int exit_code = kExitOk;

  if (a.kind == "dominating-to-mcs" || a.kind == "dominating-to-mscs") {
    conset::ColoredGraph src = conset::ColoredGraph::load_file(a.input);
    src.validate();
    if (!src.is_connected()) throw std::invalid_argument("source must be connected");
    bool strict = a.kind == "dominating-to-mscs";
    conset::ColoredGraph target =
        strict ? conset::dominating_to_mscs(src) : conset::dominating_to_mcs(src);
    target.save_file(a.output);
    meta["source_vertices"] = src.n();
    meta["expected_optimum"] = "minimum dominating set of the source plus one";
    if (strict) {
      meta["copy_offset"] = src.n();
      meta["singleton"] = 2 * src.n();
      meta["weights"] = {{"within_copy", 2}, {"across_copies", 3}, {"singleton", 1}};
    } else {
      meta["apex"] = src.n();
    }
    if (a.certify) {
      conset::CertifyReport rep = strict ? conset::certify_dominating_to_mscs(src, a.cap)
                                         : conset::certify_dominating_to_mcs(src, a.cap);
      meta["certificate"] = {{"ok", rep.ok},
                             {"source_optimum", rep.source_value},
                             {"target_optimum", rep.target_value},
                             {"expected", rep.expected}};
      std::cerr << "certificate " << (rep.ok ? "ok" : "MISMATCH") << ": dominating "
                << rep.source_value << ", target " << rep.target_value << ", expected "
                << rep.expected << "\n";
      if (!rep.ok) exit_code = kExitVerifyFail;
    }
  } else if (a.kind == "max2sat-to-tree") {
    conset::Max2SatInstance f = conset::load_dimacs_2cnf(a.input);
    conset::Max2SatTree t = conset::max2sat_to_tree(f, a.anchors);
    t.tree.save_file(a.output);
    int n = f.num_vars, m = static_cast<int>(f.clauses.size()), M = t.anchors_per_side;
    meta["num_vars"] = n;
    meta["num_clauses"] = m;
    meta["anchors_per_side"] = M;
    meta["target_size"] = {{"base", n * (M + 2) + 3 * m + 1}, {"per_satisfied_clause", -1}};
    meta["hub"] = {t.hub(1), t.hub(2), t.hub(3)};
    auto path_ids = [](int first, int len) {
      std::vector<int> ids(len);
      for (int i = 0; i < len; ++i) ids[i] = first + i;
      return ids;
    };
    ordered_json vars = ordered_json::array();
    for (int i = 0; i < n; ++i) {
      ordered_json v;
      v["positive_path"] = path_ids(t.pos(i, 1), 4);
      v["negative_path"] = path_ids(t.neg(i, 1), 4);
      v["positive_anchors"] = path_ids(t.pos_anchor(i, 1), M);
      v["negative_anchors"] = path_ids(t.neg_anchor(i, 1), M);
      vars.push_back(v);
    }
    meta["variables"] = vars;
    ordered_json clauses = ordered_json::array();
    for (int c = 0; c < m; ++c) {
      ordered_json jc;
      jc["literals"] = {f.clauses[c].first, f.clauses[c].second};
      jc["first_occurrence_path"] = path_ids(t.left(c, 1), 7);
      jc["second_occurrence_path"] = path_ids(t.right(c, 1), 7);
      jc["clause_path"] = path_ids(t.clause(c, 1), 7);
      clauses.push_back(jc);
    }
    meta["clauses"] = clauses;
    if (a.certify) {
      std::string complaint = conset::check_max2sat_tree(t);
      bool structural_ok = complaint.empty();
      conset::Max2SatResult best = conset::brute_max2sat(f);
      std::vector<bool> assignment(n);
      for (int i = 0; i < n; ++i) assignment[i] = (best.assignment >> i) & 1u;
      std::vector<int> va = t.assignment_witness(assignment);
      bool witness_ok = conset::verify_cs(t.tree, va).ok &&
                        static_cast<int>(va.size()) == t.target_size(best.satisfied);
      meta["certificate"] = {{"structural_ok", structural_ok},
                             {"complaint", complaint},
                             {"max_satisfiable", best.satisfied},
                             {"witness_ok", witness_ok},
                             {"witness_size", static_cast<int>(va.size())},
                             {"expected_size", t.target_size(best.satisfied)}};
      std::cerr << "certificate " << (structural_ok && witness_ok ? "ok" : "MISMATCH") << "\n";
      if (!structural_ok || !witness_ok) exit_code = kExitVerifyFail;
    }
  } else {
    throw UsageError("unknown reduction '" + a.kind + "'");
  }

  std::ofstream metaout(a.output + ".meta.json", std::ios::binary);
  if (!metaout) throw std::invalid_argument("cannot write " + a.output + ".meta.json");
  metaout << meta.dump(2) << "\n";
  std::cerr << "wrote " << a.output << " and " << a.output << ".meta.json\n";
  return exit_code;
}

struct GenArgs {
  std::string shape, output;
  int n = 10;
  int colors = 2;
  std::uint64_t seed = 1;
  int legs = -1;
  int teeth = -1;
  int extra_edges = -1;
  bool weighted = false;
  std::int64_t wmin = 1, wmax = 5;
};

int run_gen(const GenArgs& a) {
  conset::Rng rng(a.seed);
  conset::ColoredGraph g;
  if (a.shape == "path")
    g = conset::random_path(rng, a.n, a.colors);
  else if (a.shape == "cycle")
    g = conset::random_cycle(rng, a.n, a.colors);
  else if (a.shape == "spider")
    g = conset::random_spider(rng, a.n, a.colors, a.legs);
  else if (a.shape == "comb")
    g = conset::random_comb(rng, a.n, a.colors, a.teeth);
  else if (a.shape == "tree")
    g = conset::random_tree(rng, a.n, a.colors);
  else if (a.shape == "general")
    g = conset::random_connected(rng, a.n, a.colors,
                                 a.extra_edges == -1 ? std::max(1, a.n / 2) : a.extra_edges);
  else
    throw UsageError("unknown shape '" + a.shape + "'");
  if (a.weighted) g = conset::with_random_weights(rng, g, a.wmin, a.wmax);
  emit(g.to_json(), a.output);
  return kExitOk;
}

struct BenchArgs {
  std::string shape = "path";
  std::string sizes;
  std::uint64_t seed = 1;
  int colors = 2;
};

int run_bench(const BenchArgs& a) {
  std::vector<int> sizes;
  if (!a.sizes.empty()) {
    sizes = parse_id_list(a.sizes);
  } else if (a.shape == "path") {
    sizes = {1000, 10000, 100000};
  } else if (a.shape == "tree") {
    sizes = {20, 40, 80};
  } else {
    sizes = {10, 12, 14, 16, 18, 20};
  }
  std::cout << "shape,n,algorithm,wall_ms\n";
  for (int n : sizes) {
    conset::Rng rng(a.seed);
    std::string algorithm;
    conset::ColoredGraph g;
    if (a.shape == "path") {
      g = conset::random_path(rng, n, a.colors);
      algorithm = "path-overlay";
    } else if (a.shape == "tree") {
      g = conset::random_tree(rng, n, a.colors);
      algorithm = "tree-dp";
    } else if (a.shape == "oracle") {
      g = conset::random_tree(rng, n, a.colors);
      algorithm = "exhaustive";
    } else {
      throw UsageError("bench shapes: path, tree, oracle");
    }
    auto t0 = std::chrono::steady_clock::now();
    conset::SolveResult r;
    if (a.shape == "path")
      r = conset::solve_mscs_path(g);
    else if (a.shape == "tree")
      r = conset::solve_mscs_tree(g);
    else
      r = conset::brute_mscs(g);
    double ms = elapsed_ms(t0);
    std::cout << a.shape << "," << n << "," << algorithm << "," << ms << "\n";
    (void)r;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers, verifiers and instance tooling for consistent subsets"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("--input", solve_args.input, "instance file")->required();
  solve->add_option("--output", solve_args.output, "write the report here instead of stdout");
  solve->add_option("--problem", solve_args.problem, "mcs, mscs or mcss");
  solve->add_option("--class", solve_args.cls,
                    "auto, path, cycle, spider, comb, tree or brute");
  solve->add_flag("--verify", solve_args.verify, "re-check the witness");
  solve->add_flag("--json", solve_args.json, "machine-readable report");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check a candidate subset");
  verify->add_option("--input", verify_args.input, "instance file")->required();
  verify->add_option("--output", verify_args.output, "write the report here");
  verify->add_option("--subset", verify_args.subset, "comma-separated vertex ids")->required();
  verify->add_option("--mode", verify_args.mode, "cs, scs or css");
  verify->add_flag("--json", verify_args.json, "machine-readable report");

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "emit a hardness construction");
  reduce
      ->add_option("kind", reduce_args.kind,
                   "dominating-to-mcs, dominating-to-mscs or max2sat-to-tree")
      ->required();
  reduce->add_option("--input", reduce_args.input, "source graph or DIMACS 2-CNF")->required();
  reduce->add_option("--output", reduce_args.output, "target instance file")->required();
  reduce->add_flag("--certify", reduce_args.certify, "check the construction exhaustively");
  reduce->add_option("--stabilizer", reduce_args.anchors,
                     "anchor vertices per literal side (max2sat only)");
  reduce->add_option("--cap", reduce_args.cap, "exhaustive solver size cap");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a pseudo-random instance");
  gen->add_option("--shape", gen_args.shape, "path, cycle, spider, comb, tree or general")
      ->required();
  gen->add_option("--n", gen_args.n, "vertex count");
  gen->add_option("--colors", gen_args.colors, "palette size");
  gen->add_option("--seed", gen_args.seed, "rng seed");
  gen->add_option("--output", gen_args.output, "instance file (stdout when absent)");
  gen->add_option("--legs", gen_args.legs, "spider leg count");
  gen->add_option("--teeth", gen_args.teeth, "minimum nonempty comb teeth");
  gen->add_option("--extra-edges", gen_args.extra_edges, "extra edges for general graphs");
  gen->add_flag("--weighted", gen_args.weighted, "draw integer edge weights");
  gen->add_option("--wmin", gen_args.wmin, "smallest weight");
  gen->add_option("--wmax", gen_args.wmax, "largest weight");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time solvers over a size ladder");
  bench->add_option("--shape", bench_args.shape, "path, tree or oracle");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated instance sizes");
  bench->add_option("--seed", bench_args.seed, "rng seed");
  bench->add_option("--colors", bench_args.colors, "palette size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (reduce->parsed()) return run_reduce(reduce_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const conset::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
