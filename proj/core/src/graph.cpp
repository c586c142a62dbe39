#include "conset/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace conset {

ColoredGraph::ColoredGraph(int n, std::vector<int> colors, bool weighted)
    : n_(n), weighted_(weighted), colors_(std::move(colors)), adj_(n) {
  if (static_cast<int>(colors_.size()) != n_)
    throw std::invalid_argument("colors size must equal n");
}

void ColoredGraph::add_edge(int u, int v, std::int64_t w) {
  edges_.push_back({u, v, w});
  if (u >= 0 && u < n_ && v >= 0 && v < n_) {
    adj_[u].emplace_back(v, w);
    adj_[v].emplace_back(u, w);
  }
}

int ColoredGraph::num_colors() const {
  std::set<int> s(colors_.begin(), colors_.end());
  return static_cast<int>(s.size());
}

void ColoredGraph::validate() const {
  if (n_ <= 0) throw std::invalid_argument("graph must have at least one vertex");
  for (int c : colors_)
    if (c < 0) throw std::invalid_argument("colors must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self loops are not allowed");
    if (e.w <= 0) throw std::invalid_argument("edge weights must be positive");
    if (!weighted_ && e.w != 1)
      throw std::invalid_argument("unweighted graph has an edge with weight != 1");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("duplicate edge");
  }
}

bool ColoredGraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> vis(n_, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, w] : adj_[v]) {
      if (!vis[u]) {
        vis[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

std::string ColoredGraph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["weighted"] = weighted_;
  j["colors"] = colors_;
  std::vector<Edge> sorted = edges_;
  for (Edge& e : sorted)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : sorted) {
    if (weighted_)
      edges.push_back({e.u, e.v, e.w});
    else
      edges.push_back({e.u, e.v});
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

ColoredGraph ColoredGraph::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("colors") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs keys n, colors, edges");
  int n = j.at("n").get<int>();
  bool weighted = j.value("weighted", false);
  auto colors = j.at("colors").get<std::vector<int>>();
  if (static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("colors size must equal n");
  ColoredGraph g(n, std::move(colors), weighted);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw std::invalid_argument("edge must be [u,v] or [u,v,w]");
    int u = e.at(0).get<int>();
    int v = e.at(1).get<int>();
    std::int64_t w = e.size() == 3 ? e.at(2).get<std::int64_t>() : 1;
    g.add_edge(u, v, w);
  }
  g.validate();
  return g;
}

ColoredGraph ColoredGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void ColoredGraph::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << to_json();
}

}  // namespace conset
