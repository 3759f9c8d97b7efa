#include "jaco/graph_params.hpp"

#include <algorithm>
#include <stdexcept>

namespace jaco {

std::int64_t size(const JacoGraph& g) { return g.edge_count(); }

std::int64_t max_degree(const JacoGraph& g) {
  std::int64_t best = 0;
  for (Vertex i = 1; i <= g.order(); ++i) best = std::max(best, g.degree(i));
  return best;
}

std::vector<Vertex> delta_set(const JacoGraph& g) {
  const std::int64_t delta = max_degree(g);
  std::vector<Vertex> out;
  for (Vertex i = 1; i <= g.order(); ++i) {
    if (g.degree(i) == delta) out.push_back(i);
  }
  return out;
}

std::int64_t eccentricity(const JacoGraph& g, Vertex source) {
  Vertex a = g.lo(source);
  Vertex b = g.hi(source);
  if (a == source && b == source) return 0;  // J_1
  std::int64_t radius = 1;
  while (a > 1 || b < g.order()) {
    const Vertex next_a = g.lo(a);
    const Vertex next_b = g.hi(b);
    if (next_a == a && next_b == b) throw std::logic_error("eccentricity: graph is disconnected");
    a = next_a;
    b = next_b;
    ++radius;
  }
  return radius;
}

std::int64_t diameter(const JacoGraph& g) {
  return std::max(eccentricity(g, 1), eccentricity(g, g.order()));
}

std::int64_t gamma_bruteforce(const GeneralGraph& g, std::int64_t limit) {
  if (limit > 63) throw std::invalid_argument("gamma_bruteforce: limit above 63");
  const std::int64_t n = g.order();
  if (n > limit) throw std::length_error("gamma_bruteforce: order exceeds limit");

  std::vector<std::uint64_t> masks(n);
  for (Vertex v = 1; v <= n; ++v) masks[v - 1] = g.closed_mask(v);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  for (std::int64_t k = 1; k <= n; ++k) {
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    while (true) {
      std::uint64_t covered = 0;
      for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
        covered |= masks[__builtin_ctzll(rest)];
      }
      if (covered == full) return k;
      // Gosper's hack: next subset of the same cardinality.
      const std::uint64_t low = subset & -subset;
      const std::uint64_t ripple = subset + low;
      if (ripple == 0) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
      if (subset > full) break;
    }
  }
  return n;
}

std::int64_t gamma_bruteforce(const JacoGraph& g, std::int64_t limit) {
  if (g.order() > limit) throw std::length_error("gamma_bruteforce: order exceeds limit");
  if (g.order() == 1) return 0;
  return gamma_bruteforce(GeneralGraph::from_jaco(g), limit);
}

std::vector<Vertex> gamma_interval_set(const JacoGraph& g) {
  std::vector<Vertex> chosen;
  if (g.order() == 1) return chosen;
  Vertex u = 1;
  while (u <= g.order()) {
    const Vertex w = g.hi(u);
    chosen.push_back(w);
    u = g.hi(w) + 1;
  }
  return chosen;
}

std::int64_t gamma_interval(const JacoGraph& g) {
  return static_cast<std::int64_t>(gamma_interval_set(g).size());
}

std::int64_t delta_recursive(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("delta_recursive: n must be >= 2");
  const std::int64_t t = t1_closed(n);
  return t + t1_closed(n - t);
}

std::vector<std::int64_t> prefix_sizes(const JacoGraph& g) {
  std::vector<std::int64_t> out;
  out.reserve(g.order());
  std::int64_t running = 0;
  for (Vertex m = 1; m <= g.order(); ++m) {
    running += g.t1(m);
    out.push_back(running);
  }
  return out;
}

DegreeSweep degree_sweep(std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("degree_sweep: max_n must be >= 1");
  DegreeSweep sweep;
  sweep.delta.reserve(max_n);
  sweep.delta_set.reserve(max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const JacoGraph g = build_jaco(n);
    auto set = delta_set(g);
    sweep.delta.push_back(g.degree(set.front()));
    sweep.delta_set.push_back(std::move(set));
  }
  return sweep;
}

ParamRow param_row(const JacoGraph& g) {
  const std::int64_t n = g.order();
  ParamRow row;
  row.n = n;
  row.t1_n = g.t1(n);
  row.t2_star_n = t2_star(n);
  row.size = size(g);
  row.delta_set = delta_set(g);
  row.gamma = gamma_interval(g);
  row.diam = diameter(g);
  row.delta = max_degree(g);
  return row;
}

ParamRow param_row(std::int64_t n) { return param_row(build_jaco(n)); }

}  // namespace jaco
