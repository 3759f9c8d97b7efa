#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jaco/general_graph.hpp"
#include "jaco/graph_params.hpp"
#include "jaco/jaco_graph.hpp"

namespace jaco {

enum class DomPathKind { primary, secondary, general };

std::string_view to_string(DomPathKind kind);

/// A path together with a minimum dominating set of the path itself.
struct DomPath {
  std::vector<Vertex> vertices;
  DomPathKind kind = DomPathKind::primary;
  std::vector<Vertex> gamma_set;

  std::int64_t edge_length() const { return static_cast<std::int64_t>(vertices.size()) - 1; }

  friend bool operator==(const DomPath&, const DomPath&) = default;
};

/// Three consecutive dom-path vertices: first, then two upper-neighbor hops.
struct ThreeString {
  Vertex first;
  Vertex middle;
  Vertex third;
};

Vertex upper_neighbor(const JacoGraph& g, Vertex i);
/// Throws std::invalid_argument for i == 1.
Vertex lower_neighbor(const JacoGraph& g, Vertex i);

/// Strings (1,2,3), (4,7,11), (12,20,32), ... up to and including the first
/// one whose third vertex reaches n. Hops use the unbounded reach i + t2*(i).
std::vector<ThreeString> three_strings_through(Vertex n);

/**
 * Primary minimal dom-path of J_n(x), from v_1 to v_n.
 *
 * With the last string (s1, s2, s3) being the first whose s3 >= n:
 *  - n in [s1, s2]: the tail is s1 then v_n, or v_n straight after the
 *    previous string when that string's end already reaches v_n. The
 *    dominating set is the earlier middles plus v_n.
 *  - n in (s2, s3]: the tail is s1, s2, v_n and the dominating set is the
 *    earlier middles plus s2.
 */
DomPath primary_dom_path(std::int64_t n);

/// Secondary dom-path of J_n(x): from v_n repeat (lower, lower, step -1)
/// until v_1 is reached. Dominating set: middles of the complete triples,
/// plus v_1 when the final triple is cut short.
DomPath secondary_dom_path(std::int64_t n);

/// True iff the closed neighborhoods of `set` cover every vertex.
/// Throws std::out_of_range for members outside the graph.
bool dominates(const JacoGraph& g, std::span<const Vertex> set);
bool dominates(const GeneralGraph& g, std::span<const Vertex> set);

/// gamma(P_L) = ceil(L / 3) for a path on L >= 1 vertices.
std::int64_t path_gamma(std::int64_t length_vertices);

/// True iff `set` dominates `path` viewed as a path graph on its own.
bool dominates_path(std::span<const Vertex> path, std::span<const Vertex> set);

/// Every minimum dominating set of `path` viewed as a path graph.
std::vector<std::vector<Vertex>> path_gamma_sets(std::span<const Vertex> path);

/// Middles of the infinite three-string pattern: 2, 7, 20, 54, ...
/// Throws std::out_of_range if k < 1 or k > kMaxConjecture7Terms.
inline constexpr std::int64_t kMaxConjecture7Terms = 40;
std::vector<std::int64_t> conjecture7_subscripts(std::int64_t k);

/// Every dominating set of minimum size, each ascending, in lexicographic order.
std::vector<std::vector<Vertex>> all_gamma_sets(const GeneralGraph& g,
                                                std::int64_t limit = kBruteForceLimit);

/// Checks every dom-path property of (path, set) against g: simple path
/// with consecutive vertices adjacent, set inside the path, set a minimum
/// dominating set of the path, set dominates g and |set| == gamma(g).
bool is_dom_path(const GeneralGraph& g, std::span<const Vertex> path,
                 std::span<const Vertex> set);

/**
 * Shortest path (by vertex count) carrying a dominating set of g that is
 * also a minimum dominating set of the path, found by iterative deepening
 * over simple paths. Since gamma(P_L) = ceil(L/3), lengths below
 * 3*gamma(g) - 2 cannot qualify and are skipped.
 *
 * Throws std::length_error above `limit`, std::invalid_argument if g is
 * disconnected, std::runtime_error if no dom-path exists.
 */
DomPath minimal_dom_path_general(const GeneralGraph& g, std::int64_t limit = 12);

/// A shortest v_1 -> v_n path together with a minimum dominating set of that
/// path which fails to dominate the whole graph. At most `max_paths`
/// shortest paths are inspected.
struct DiameterPathWitness {
  std::vector<Vertex> path;
  std::vector<Vertex> path_gamma_set;
};
std::optional<DiameterPathWitness> find_nondominating_diameter_path(const JacoGraph& g,
                                                                    std::int64_t max_paths = 100000);

}  // namespace jaco
