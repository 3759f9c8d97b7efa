#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jaco/jaco_graph.hpp"

namespace jaco {

/// Simple undirected graph on vertices 1..n with optional labels.
/// Used for the small fixtures (Petersen, P_4, C_5) and as an
/// unstructured view of a JacoGraph for oracle checks.
class GeneralGraph {
 public:
  explicit GeneralGraph(std::int64_t n);

  std::int64_t order() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  /// Throws std::invalid_argument on loops, duplicates or bad endpoints.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const;

  void set_label(Vertex v, std::string label);
  const std::string& label(Vertex v) const;

  /// Bit k-1 set for every k in N[v]. Requires order() <= 64.
  std::uint64_t closed_mask(Vertex v) const;

  static GeneralGraph from_jaco(const JacoGraph& g);

 private:
  void check(Vertex v) const;

  std::int64_t n_;
  std::int64_t edges_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

GeneralGraph path_graph(std::int64_t n);
GeneralGraph cycle_graph(std::int64_t n);

/// C_5 on v1..v5 (vertices 1..5), pendant u_i on each v_i (vertices 6..10),
/// then u1u3, u1u4, u2u4, u2u5, u3u5. Labels "v1".."v5", "u1".."u5".
GeneralGraph petersen_graph();

/// Hop distances from `source`; -1 for unreachable vertices. Index 0 unused.
std::vector<std::int64_t> bfs_distances(const GeneralGraph& g, Vertex source);

/// Max shortest-path distance over all pairs, BFS from every vertex.
/// Throws std::invalid_argument if g is disconnected.
std::int64_t diameter_bfs(const GeneralGraph& g);

}  // namespace jaco
