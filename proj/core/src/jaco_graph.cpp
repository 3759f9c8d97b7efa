#include "jaco/jaco_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jaco/exact_arith.hpp"

namespace jaco {

JacoGraph JacoGraph::build(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("build_jaco: order must be >= 1");

  JacoGraph g;
  g.n_ = n;
  g.hi_.assign(n + 1, 0);
  g.lo_.assign(n + 1, 0);
  for (Vertex i = 1; i <= n; ++i) g.hi_[i] = i;

  // Seed: P_3 on v1 v2 v3, or the single edge v1 v2 when n == 2.
  if (n >= 2) g.hi_[1] = 2;
  if (n >= 3) g.hi_[2] = 3;

  // indeg_diff[j] accumulates +1 on (k, hi[k]] for every k already placed,
  // so a running sum gives the in-degree of the vertex being processed.
  std::vector<std::int64_t> indeg_diff(n + 2, 0);
  auto add_forward = [&](Vertex k) {
    if (g.hi_[k] > k) {
      indeg_diff[k + 1] += 1;
      indeg_diff[g.hi_[k] + 1] -= 1;
    }
  };
  add_forward(1);
  if (n >= 3) add_forward(2);

  std::vector<std::int64_t> indeg(n + 1, 0);
  std::int64_t running = 0;
  for (Vertex i = 1; i <= n; ++i) {
    running += indeg_diff[i];
    indeg[i] = running;
    if (i >= 3 && i <= n - 1) {
      // Largest t with indeg + t <= i, capped by the last vertex.
      const std::int64_t t = std::min(i - running, n - i);
      if (t < 1) throw std::logic_error("build_jaco: no forward edge at step " + std::to_string(i));
      g.hi_[i] = i + t;
      add_forward(i);
    }
  }

  Vertex first = 1;
  for (Vertex j = 1; j <= n; ++j) {
    while (first < j && g.hi_[first] < j) ++first;
    g.lo_[j] = first < j ? first : j;
    if (indeg[j] != j - g.lo_[j]) {
      throw std::logic_error("build_jaco: in-neighbors of v" + std::to_string(j) +
                             " are not a contiguous block");
    }
    if (j > 1 && g.hi_[j] < g.hi_[j - 1]) {
      throw std::logic_error("build_jaco: upper neighbors not monotone at v" + std::to_string(j));
    }
    if (indeg[j] + (g.hi_[j] - j) > j) {
      throw std::logic_error("build_jaco: degree cap exceeded at v" + std::to_string(j));
    }
    g.edges_ += g.hi_[j] - j;
  }
  return g;
}

void JacoGraph::check(Vertex i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("vertex v" + std::to_string(i) + " outside J_" + std::to_string(n_));
  }
}

Vertex JacoGraph::lo(Vertex i) const {
  check(i);
  return lo_[i];
}

Vertex JacoGraph::hi(Vertex i) const {
  check(i);
  return hi_[i];
}

bool JacoGraph::adjacent(Vertex i, Vertex j) const {
  check(i);
  check(j);
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return j <= hi_[i];
}

std::int64_t t1_closed(Vertex i) {
  if (i < 1) throw std::out_of_range("t1_closed: subscript must be >= 1");
  return floor_affine_sqrt5(3, -1, 2, i + 1);
}

std::int64_t t2_star(Vertex i) { return i - t1_closed(i); }

}  // namespace jaco
