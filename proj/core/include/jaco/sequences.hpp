#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "jaco/exact_arith.hpp"

namespace jaco {

// Integer sequences tied to Jaco graph parameters. Each id fixes one
// formula and its own start index; ids with a suffix are shifted or
// adapted variants of the OEIS entry they are named after.
enum class SequenceId {
  A060144,          // floor((i+1)(3-sqrt5)/2), i >= 1
  A183137,          // partial sums of A060144, n >= 1
  A319433,          // floor((n+2)(sqrt5-1)/2) - 1, n >= 2
  A003622,          // floor(t*phi^2) - 1, t >= 1
  A035336,          // 2*floor(t*phi) + t - 1, t >= 1
  A001950_CONJ4A,   // floor((t+1)*phi^2) - 2, t >= 1
  A057843_SHIFTED,  // floor(t*phi^2) - 3, t >= 2
  A134859_ADAPTED,  // 2*floor(t*phi^2) - (t+2), t >= 2
  A000149,          // floor(e^t), t >= 1
};

inline constexpr SequenceId kAllSequences[] = {
    SequenceId::A060144,         SequenceId::A183137,         SequenceId::A319433,
    SequenceId::A003622,         SequenceId::A035336,         SequenceId::A001950_CONJ4A,
    SequenceId::A057843_SHIFTED, SequenceId::A134859_ADAPTED, SequenceId::A000149,
};

std::string_view to_string(SequenceId id);
std::optional<SequenceId> parse_sequence_id(std::string_view text);

/// First valid index for `id`.
std::int64_t start_index(SequenceId id);

/// Term at index t. Throws std::out_of_range below start_index(id).
WideInt seq_term(SequenceId id, std::int64_t t);

/// Convenience for callers that stay in 64-bit range; throws
/// std::overflow_error otherwise.
std::int64_t seq_term64(SequenceId id, std::int64_t t);

/// `count` consecutive terms from start_index(id), optionally preceded by
/// the artificial leading 1.
std::vector<WideInt> seq_prefix(SequenceId id, std::int64_t count, bool prepend_artificial = false);

/// All terms with value <= bound, from start_index(id). Only for the
/// strictly increasing ids (A003622, A035336, A001950_CONJ4A,
/// A057843_SHIFTED, A134859_ADAPTED, A000149).
std::vector<std::int64_t> seq_terms_up_to(SequenceId id, std::int64_t bound);

/// OEIS b-file lines: "index value", '#' comments and blank lines ignored.
/// Throws std::runtime_error on malformed lines.
std::vector<std::pair<std::int64_t, WideInt>> parse_bfile(std::istream& in);

}  // namespace jaco
