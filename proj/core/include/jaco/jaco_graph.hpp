#pragma once

#include <cstdint>
#include <vector>

namespace jaco {

/// 1-based vertex subscript, v_1 .. v_n.
using Vertex = std::int64_t;

/// Closed index interval [lo, hi].
struct VertexRange {
  Vertex lo;
  Vertex hi;

  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

/**
 * Finite linear Jaco graph J_n(x).
 *
 * Every closed neighborhood N[v_i] is the index interval [lo(i), hi(i)]:
 * v_i ~ v_j (i < j) iff j <= hi(i) iff lo(j) <= i. Both lo and hi are
 * non-decreasing. The builder checks the interval shape while it runs and
 * throws std::logic_error if the construction ever produces a gap.
 *
 * Immutable once built.
 */
class JacoGraph {
 public:
  /// Runs the sequential edge-addition construction. Throws
  /// std::invalid_argument for n < 1.
  static JacoGraph build(std::int64_t n);

  std::int64_t order() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  Vertex lo(Vertex i) const;
  Vertex hi(Vertex i) const;
  VertexRange neighborhood(Vertex i) const { return {lo(i), hi(i)}; }

  std::int64_t degree(Vertex i) const { return hi(i) - lo(i); }
  /// |N^-(v_i)|, the number of lower-subscript neighbors.
  std::int64_t t1(Vertex i) const { return i - lo(i); }
  /// |N^+(v_i)| in this (finite) graph.
  std::int64_t t2(Vertex i) const { return hi(i) - i; }

  bool adjacent(Vertex i, Vertex j) const;

  friend bool operator==(const JacoGraph&, const JacoGraph&) = default;

 private:
  JacoGraph() = default;
  void check(Vertex i) const;

  std::int64_t n_ = 0;
  std::int64_t edges_ = 0;
  // Index 0 unused.
  std::vector<Vertex> lo_;
  std::vector<Vertex> hi_;
};

inline JacoGraph build_jaco(std::int64_t n) { return JacoGraph::build(n); }

/// floor(2(i+1)/(3+sqrt5)) = floor((i+1)(3-sqrt5)/2). Requires i >= 1.
std::int64_t t1_closed(Vertex i);

/// i - t1_closed(i): forward reach of v_i in any J_n with n large enough.
std::int64_t t2_star(Vertex i);

/// Subscript of the highest neighbor of v_i in a sufficiently large host,
/// i + t2_star(i).
inline Vertex upper_reach(Vertex i) { return i + t2_star(i); }

}  // namespace jaco
