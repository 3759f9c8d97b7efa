#include "jaco/dompath.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace jaco {

namespace {

std::vector<std::uint64_t> gamma_set_masks(const GeneralGraph& g, std::int64_t limit) {
  const std::int64_t n = g.order();
  const std::int64_t gamma = gamma_bruteforce(g, limit);
  std::vector<std::uint64_t> masks(n);
  for (Vertex v = 1; v <= n; ++v) masks[v - 1] = g.closed_mask(v);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  std::vector<std::uint64_t> found;
  std::uint64_t subset = (std::uint64_t{1} << gamma) - 1;
  while (subset <= full) {
    std::uint64_t covered = 0;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      covered |= masks[__builtin_ctzll(rest)];
    }
    if (covered == full) found.push_back(subset);
    const std::uint64_t low = subset & -subset;
    const std::uint64_t ripple = subset + low;
    if (ripple == 0) break;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return found;
}

std::vector<Vertex> mask_to_set(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(__builtin_ctzll(mask) + 1);
  return out;
}

// Positions 0..L-1 of the path covered by the members at `chosen` positions.
bool positions_dominate(std::size_t length, const std::vector<std::size_t>& chosen) {
  std::vector<bool> covered(length, false);
  for (std::size_t p : chosen) {
    covered[p] = true;
    if (p > 0) covered[p - 1] = true;
    if (p + 1 < length) covered[p + 1] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace

std::string_view to_string(DomPathKind kind) {
  switch (kind) {
    case DomPathKind::primary:
      return "primary";
    case DomPathKind::secondary:
      return "secondary";
    case DomPathKind::general:
      return "general";
  }
  return "unknown";
}

Vertex upper_neighbor(const JacoGraph& g, Vertex i) { return g.hi(i); }

Vertex lower_neighbor(const JacoGraph& g, Vertex i) {
  if (i == 1) throw std::invalid_argument("lower_neighbor: v1 has no lower neighbor");
  return g.lo(i);
}

std::vector<ThreeString> three_strings_through(Vertex n) {
  if (n < 1) throw std::invalid_argument("three_strings_through: n must be >= 1");
  std::vector<ThreeString> strings;
  Vertex first = 1;
  while (true) {
    const Vertex middle = upper_reach(first);
    const Vertex third = upper_reach(middle);
    strings.push_back({first, middle, third});
    if (third >= n) break;
    first = third + 1;
  }
  return strings;
}

DomPath primary_dom_path(std::int64_t n) {
  const auto strings = three_strings_through(n);
  DomPath path;
  path.kind = DomPathKind::primary;
  for (std::size_t s = 0; s + 1 < strings.size(); ++s) {
    path.vertices.insert(path.vertices.end(),
                         {strings[s].first, strings[s].middle, strings[s].third});
    path.gamma_set.push_back(strings[s].middle);
  }

  const ThreeString& last = strings.back();
  if (n <= last.middle) {
    const bool reaches_from_previous =
        !path.vertices.empty() && upper_reach(path.vertices.back()) >= n;
    if (!reaches_from_previous && n != last.first) path.vertices.push_back(last.first);
    path.vertices.push_back(n);
    path.gamma_set.push_back(n);
  } else {
    path.vertices.insert(path.vertices.end(), {last.first, last.middle, n});
    path.gamma_set.push_back(last.middle);
  }
  return path;
}

DomPath secondary_dom_path(std::int64_t n) {
  const JacoGraph g = build_jaco(n);
  DomPath path;
  path.kind = DomPathKind::secondary;
  path.vertices.push_back(n);
  for (std::size_t step = 0; path.vertices.back() != 1; ++step) {
    const Vertex here = path.vertices.back();
    path.vertices.push_back(step % 3 == 2 ? here - 1 : lower_neighbor(g, here));
  }

  const std::size_t full = path.vertices.size() / 3;
  for (std::size_t s = 0; s < full; ++s) path.gamma_set.push_back(path.vertices[3 * s + 1]);
  if (path.vertices.size() % 3 != 0) path.gamma_set.push_back(1);
  return path;
}

bool dominates(const JacoGraph& g, std::span<const Vertex> set) {
  const std::int64_t n = g.order();
  std::vector<std::int64_t> diff(n + 2, 0);
  for (Vertex v : set) {
    const VertexRange r = g.neighborhood(v);
    diff[r.lo] += 1;
    diff[r.hi + 1] -= 1;
  }
  std::int64_t running = 0;
  for (Vertex i = 1; i <= n; ++i) {
    running += diff[i];
    if (running == 0) return false;
  }
  return true;
}

bool dominates(const GeneralGraph& g, std::span<const Vertex> set) {
  std::vector<bool> covered(g.order() + 1, false);
  for (Vertex v : set) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](bool c) { return c; });
}

std::int64_t path_gamma(std::int64_t length_vertices) {
  if (length_vertices < 1) throw std::invalid_argument("path_gamma: length must be >= 1");
  return (length_vertices + 2) / 3;
}

bool dominates_path(std::span<const Vertex> path, std::span<const Vertex> set) {
  std::vector<std::size_t> chosen;
  for (Vertex v : set) {
    const auto it = std::find(path.begin(), path.end(), v);
    if (it == path.end()) return false;
    chosen.push_back(static_cast<std::size_t>(it - path.begin()));
  }
  return positions_dominate(path.size(), chosen);
}

std::vector<std::vector<Vertex>> path_gamma_sets(std::span<const Vertex> path) {
  const std::size_t length = path.size();
  const auto k = static_cast<std::size_t>(path_gamma(static_cast<std::int64_t>(length)));
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (chosen.size() == k) {
      if (positions_dominate(length, chosen)) {
        std::vector<Vertex> set;
        for (std::size_t p : chosen) set.push_back(path[p]);
        out.push_back(std::move(set));
      }
      return;
    }
    for (std::size_t p = from; p + (k - chosen.size()) <= length; ++p) {
      chosen.push_back(p);
      pick(p + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return out;
}

std::vector<std::int64_t> conjecture7_subscripts(std::int64_t k) {
  if (k < 1 || k > kMaxConjecture7Terms) {
    throw std::out_of_range("conjecture7_subscripts: k out of range");
  }
  std::vector<std::int64_t> middles;
  Vertex first = 1;
  while (static_cast<std::int64_t>(middles.size()) < k) {
    const Vertex middle = upper_reach(first);
    middles.push_back(middle);
    first = upper_reach(middle) + 1;
  }
  return middles;
}

std::vector<std::vector<Vertex>> all_gamma_sets(const GeneralGraph& g, std::int64_t limit) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint64_t mask : gamma_set_masks(g, limit)) out.push_back(mask_to_set(mask));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dom_path(const GeneralGraph& g, std::span<const Vertex> path,
                 std::span<const Vertex> set) {
  if (path.empty()) return false;
  std::vector<bool> seen(g.order() + 1, false);
  for (std::size_t p = 0; p < path.size(); ++p) {
    if (path[p] < 1 || path[p] > g.order() || seen[path[p]]) return false;
    seen[path[p]] = true;
    if (p > 0 && !g.adjacent(path[p - 1], path[p])) return false;
  }
  if (static_cast<std::int64_t>(set.size()) != path_gamma(static_cast<std::int64_t>(path.size()))) {
    return false;
  }
  if (!dominates_path(path, set)) return false;
  if (!dominates(g, set)) return false;
  return static_cast<std::int64_t>(set.size()) == gamma_bruteforce(g, 63);
}

DomPath minimal_dom_path_general(const GeneralGraph& g, std::int64_t limit) {
  const std::int64_t n = g.order();
  if (n > limit) throw std::length_error("minimal_dom_path_general: order exceeds limit");
  const auto dist = bfs_distances(g, 1);
  if (std::any_of(dist.begin() + 1, dist.end(), [](std::int64_t d) { return d < 0; })) {
    throw std::invalid_argument("minimal_dom_path_general: graph is disconnected");
  }

  const auto gamma_masks = gamma_set_masks(g, limit);
  const std::int64_t gamma = std::popcount(gamma_masks.front());

  std::vector<Vertex> path;
  std::vector<bool> on_path(n + 1, false);
  std::uint64_t path_mask = 0;
  std::optional<DomPath> result;

  auto try_path = [&]() {
    for (std::uint64_t x : gamma_masks) {
      if ((x & path_mask) != x) continue;
      const auto set = mask_to_set(x);
      if (dominates_path(path, set)) {
        result = DomPath{path, DomPathKind::general, set};
        return true;
      }
    }
    return false;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t target) -> bool {
    if (path.size() == target) return try_path();
    for (Vertex w : g.neighbors(path.back())) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      path_mask |= std::uint64_t{1} << (w - 1);
      const bool done = extend(target);
      path_mask &= ~(std::uint64_t{1} << (w - 1));
      on_path[w] = false;
      path.pop_back();
      if (done) return true;
    }
    return false;
  };

  const std::int64_t shortest = std::max<std::int64_t>(1, 3 * gamma - 2);
  for (std::int64_t target = shortest; target <= std::min(3 * gamma, n); ++target) {
    for (Vertex start = 1; start <= n; ++start) {
      path.assign({start});
      on_path.assign(n + 1, false);
      on_path[start] = true;
      path_mask = std::uint64_t{1} << (start - 1);
      if (extend(static_cast<std::size_t>(target))) return *result;
    }
  }
  throw std::runtime_error("minimal_dom_path_general: no dom-path found");
}

std::optional<DiameterPathWitness> find_nondominating_diameter_path(const JacoGraph& g,
                                                                    std::int64_t max_paths) {
  const std::int64_t n = g.order();
  auto distances_from = [&](Vertex source) {
    std::vector<std::int64_t> dist(n + 1, -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w = g.lo(v); w <= g.hi(v); ++w) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  };
  const auto from_first = distances_from(1);
  const auto from_last = distances_from(n);
  const std::int64_t span_length = from_first[n];

  std::int64_t inspected = 0;
  std::optional<DiameterPathWitness> witness;
  std::vector<Vertex> path{1};
  std::function<bool()> walk = [&]() -> bool {
    const Vertex here = path.back();
    if (here == n) {
      ++inspected;
      for (auto& set : path_gamma_sets(path)) {
        if (!dominates(g, set)) {
          witness = DiameterPathWitness{path, std::move(set)};
          return true;
        }
      }
      return inspected >= max_paths;
    }
    const auto step = static_cast<std::int64_t>(path.size());
    for (Vertex w = here + 1; w <= g.hi(here); ++w) {
      if (from_first[w] != step || from_last[w] != span_length - step) continue;
      path.push_back(w);
      const bool stop = walk();
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  if (n > 1) walk();
  return witness;
}

}  // namespace jaco
