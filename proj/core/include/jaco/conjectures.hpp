#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "jaco/graph_params.hpp"

namespace jaco {

enum class ConjectureId {
  P1,            // edge count vs A183137
  C1,            // max degree vs A319433
  C1_recursive,  // max degree vs t1(v_n) + t1(v_q)
  C1_identity,   // t1(v_n) + t1(v_q) vs A319433, pure floor identity
  C2,            // unique max degrees vs A003622
  C3,            // orders with a unique max degree vs A035336
  C4a,           // orders with |Delta-set| = 1
  C4b,           // orders with |Delta-set| = 2
  C4c,           // orders with |Delta-set| = 3
  C4_trichotomy, // orders with |Delta-set| outside {1,2,3}
  C5,            // subscripts never forming a singleton Delta-set vs 1, A003622
  C6,            // primary dom-path length - diameter in {0,1}
  C7,            // three-string middles vs floor(e^t)
};

std::string_view to_string(ConjectureId id);
std::optional<ConjectureId> parse_conjecture_id(std::string_view text);

enum class Status { verified, counterexample };
std::string_view to_string(Status status);

/// First disagreement. `index` is n for per-order checks and the sequence
/// index t for list comparisons. `expected` is the predicted value, `actual`
/// the value observed on the graphs; either side is empty when one list
/// ran out before the other.
struct Witness {
  std::int64_t index = 0;
  std::optional<std::int64_t> expected;
  std::optional<std::int64_t> actual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConjectureReport {
  ConjectureId id = ConjectureId::P1;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  Status status = Status::verified;
  std::optional<Witness> witness;
  std::int64_t truncation_margin = 0;
  /// Start index of the predicted sequence actually used for alignment.
  std::optional<std::int64_t> offset;
  std::string note;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// Classifications that depend on "appears once" are only trusted this far
/// from the end of a sweep to N: min(50, max(1, N / 10)).
std::int64_t truncation_margin(std::int64_t max_n);

ConjectureReport check_p1(std::int64_t max_n);

/// C1, C1_recursive, C1_identity over n in [2, N].
std::vector<ConjectureReport> check_c1(std::int64_t max_n);
std::vector<ConjectureReport> check_c1(const DegreeSweep& sweep);

ConjectureReport check_c2(std::int64_t max_n);
ConjectureReport check_c2(const DegreeSweep& sweep);
ConjectureReport check_c3(std::int64_t max_n);
ConjectureReport check_c3(const DegreeSweep& sweep);

/// C4a, C4b, C4c, C4_trichotomy.
std::vector<ConjectureReport> check_c4(std::int64_t max_n);
std::vector<ConjectureReport> check_c4(const DegreeSweep& sweep);

ConjectureReport check_c5(std::int64_t max_n);
ConjectureReport check_c5(const DegreeSweep& sweep);

ConjectureReport check_c6(std::int64_t max_n);

/// Compares the first K three-string middles with floor(e^t), t = 1..K.
ConjectureReport check_c7(std::int64_t k);

/// Number of three-string middles not exceeding max_n (at least 1).
std::int64_t conjecture7_terms_within(std::int64_t max_n);

/// Observed lists behind the list-valued checks, exposed so a witness can
/// be re-derived independently of the report.
std::vector<std::int64_t> unique_max_degrees(const DegreeSweep& sweep, std::int64_t margin);
std::vector<std::int64_t> orders_with_unique_max_degree(const DegreeSweep& sweep, std::int64_t margin);
std::vector<std::int64_t> orders_with_delta_set_size(const DegreeSweep& sweep, std::size_t card,
                                                     std::int64_t margin);
std::vector<std::int64_t> never_singleton_subscripts(const DegreeSweep& sweep, std::int64_t margin);

/// Every check for orders up to N (requires N >= 10), in a fixed order.
/// `only`, when set, restricts the run to reports whose id starts with it
/// (so "C4" selects C4a, C4b, C4c and C4_trichotomy).
std::vector<ConjectureReport> run_checks(std::int64_t max_n, std::optional<std::string> only = {});

std::string to_text(const ConjectureReport& report);
nlohmann::json to_json(const ConjectureReport& report);

}  // namespace jaco
