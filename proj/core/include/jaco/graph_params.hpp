#pragma once

#include <cstdint>
#include <vector>

#include "jaco/general_graph.hpp"
#include "jaco/jaco_graph.hpp"

namespace jaco {

/// One row of the parameter table for J_n(x).
struct ParamRow {
  std::int64_t n = 0;
  std::int64_t t1_n = 0;       // t1(v_n)
  std::int64_t t2_star_n = 0;  // t2*(v_n)
  std::int64_t size = 0;       // edge count
  std::vector<Vertex> delta_set;
  std::int64_t gamma = 0;
  std::int64_t diam = 0;
  std::int64_t delta = 0;

  friend bool operator==(const ParamRow&, const ParamRow&) = default;
};

inline constexpr std::int64_t kBruteForceLimit = 25;

std::int64_t size(const JacoGraph& g);
std::int64_t max_degree(const JacoGraph& g);
/// Vertices of maximum degree, ascending.
std::vector<Vertex> delta_set(const JacoGraph& g);

/// Largest hop distance from v_source.
std::int64_t eccentricity(const JacoGraph& g, Vertex source);

/**
 * Diameter of J_n(x).
 *
 * The ball of radius r around any vertex is an index interval, and the
 * ball of radius r+1 around [a, b] is [lo(a), hi(b)] because lo and hi are
 * monotone. So every BFS runs in O(diam) frontier steps, and the vertex
 * farthest from any source is v_1 or v_n. Maximising over sources then
 * gives diam = max(ecc(v_1), ecc(v_n)).
 */
std::int64_t diameter(const JacoGraph& g);

/// Exact domination number by enumerating subsets in increasing size.
/// Standard convention: gamma(K_1) = 1. Throws std::length_error when
/// order() > limit (limit itself must not exceed 63).
std::int64_t gamma_bruteforce(const GeneralGraph& g, std::int64_t limit = kBruteForceLimit);

/// Same oracle on a Jaco graph, with the table convention gamma(J_1) = 0.
std::int64_t gamma_bruteforce(const JacoGraph& g, std::int64_t limit = kBruteForceLimit);

/**
 * Exact domination number of a Jaco graph via a left-to-right sweep: take
 * the smallest undominated u and select the neighbor of u with the largest
 * upper neighbor (the largest index among ties), which is hi(u) because hi
 * is non-decreasing. Optimal for interval-shaped neighborhoods by the
 * usual exchange argument. Returns 0 for J_1.
 */
std::int64_t gamma_interval(const JacoGraph& g);

/// The dominating set chosen by gamma_interval, ascending.
std::vector<Vertex> gamma_interval_set(const JacoGraph& g);

/// t1_closed(n) + t1_closed(n - t1_closed(n)). Requires n >= 2.
std::int64_t delta_recursive(std::int64_t n);

/**
 * Edge counts of J_1 .. J_N read off a single J_N. For m <= N the graph J_m
 * is exactly the subgraph of J_N induced on v_1..v_m: v_k reaches v_j
 * (j <= m) in J_m iff it does in J_N, since forward reach is only capped by
 * the order. Entry m-1 holds the size of J_m.
 */
std::vector<std::int64_t> prefix_sizes(const JacoGraph& g);

/// max_degree and delta_set of J_n for every n in [1, N], each J_n built
/// from scratch. Index n-1 holds J_n.
struct DegreeSweep {
  std::vector<std::int64_t> delta;
  std::vector<std::vector<Vertex>> delta_set;
};
DegreeSweep degree_sweep(std::int64_t max_n);

ParamRow param_row(const JacoGraph& g);
ParamRow param_row(std::int64_t n);

}  // namespace jaco
