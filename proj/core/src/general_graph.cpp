#include "jaco/general_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace jaco {

GeneralGraph::GeneralGraph(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("GeneralGraph: order must be >= 1");
  adj_.resize(n + 1);
  labels_.resize(n + 1);
  for (Vertex v = 1; v <= n; ++v) labels_[v] = "v" + std::to_string(v);
}

void GeneralGraph::check(Vertex v) const {
  if (v < 1 || v > n_) throw std::out_of_range("GeneralGraph: vertex out of range");
}

void GeneralGraph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("GeneralGraph: loops are not allowed");
  if (adjacent(u, v)) throw std::invalid_argument("GeneralGraph: duplicate edge");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

bool GeneralGraph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<Vertex>& GeneralGraph::neighbors(Vertex v) const {
  check(v);
  return adj_[v];
}

void GeneralGraph::set_label(Vertex v, std::string label) {
  check(v);
  labels_[v] = std::move(label);
}

const std::string& GeneralGraph::label(Vertex v) const {
  check(v);
  return labels_[v];
}

std::uint64_t GeneralGraph::closed_mask(Vertex v) const {
  check(v);
  if (n_ > 64) throw std::length_error("closed_mask: order exceeds 64");
  std::uint64_t mask = std::uint64_t{1} << (v - 1);
  for (Vertex w : adj_[v]) mask |= std::uint64_t{1} << (w - 1);
  return mask;
}

GeneralGraph GeneralGraph::from_jaco(const JacoGraph& g) {
  GeneralGraph out(g.order());
  for (Vertex i = 1; i <= g.order(); ++i) {
    for (Vertex j = i + 1; j <= g.hi(i); ++j) out.add_edge(i, j);
  }
  return out;
}

GeneralGraph path_graph(std::int64_t n) {
  GeneralGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

GeneralGraph cycle_graph(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  GeneralGraph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

GeneralGraph petersen_graph() {
  GeneralGraph g(10);
  auto u = [](Vertex i) { return i + 5; };
  for (Vertex i = 1; i <= 5; ++i) {
    g.set_label(i, "v" + std::to_string(i));
    g.set_label(u(i), "u" + std::to_string(i));
    g.add_edge(i, i % 5 + 1);
    g.add_edge(i, u(i));
  }
  g.add_edge(u(1), u(3));
  g.add_edge(u(1), u(4));
  g.add_edge(u(2), u(4));
  g.add_edge(u(2), u(5));
  g.add_edge(u(3), u(5));
  return g;
}

std::vector<std::int64_t> bfs_distances(const GeneralGraph& g, Vertex source) {
  std::vector<std::int64_t> dist(g.order() + 1, -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::int64_t diameter_bfs(const GeneralGraph& g) {
  std::int64_t diam = 0;
  for (Vertex s = 1; s <= g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (dist[v] < 0) throw std::invalid_argument("diameter_bfs: graph is disconnected");
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

}  // namespace jaco
