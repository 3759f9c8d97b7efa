#include "jaco/sequences.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace jaco {

namespace {

constexpr std::int64_t kSmall = std::int64_t{1} << 40;

WideInt affine(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t m) {
  if (m > -kSmall && m < kSmall) return floor_affine_sqrt5(a, b, d, m);
  return floor_affine_sqrt5(WideInt(a), WideInt(b), WideInt(d), WideInt(m));
}

// floor(t * phi^2) with phi^2 = (3 + sqrt5) / 2.
WideInt floor_phi_squared(std::int64_t t) { return affine(3, 1, 2, t); }

WideInt a060144(std::int64_t i) { return affine(3, -1, 2, i + 1); }

bool strictly_increasing(SequenceId id) {
  return id != SequenceId::A060144 && id != SequenceId::A183137 && id != SequenceId::A319433;
}

}  // namespace

std::string_view to_string(SequenceId id) {
  switch (id) {
    case SequenceId::A060144:
      return "A060144";
    case SequenceId::A183137:
      return "A183137";
    case SequenceId::A319433:
      return "A319433";
    case SequenceId::A003622:
      return "A003622";
    case SequenceId::A035336:
      return "A035336";
    case SequenceId::A001950_CONJ4A:
      return "A001950_CONJ4A";
    case SequenceId::A057843_SHIFTED:
      return "A057843_SHIFTED";
    case SequenceId::A134859_ADAPTED:
      return "A134859_ADAPTED";
    case SequenceId::A000149:
      return "A000149";
  }
  return "unknown";
}

std::optional<SequenceId> parse_sequence_id(std::string_view text) {
  for (SequenceId id : kAllSequences) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::int64_t start_index(SequenceId id) {
  switch (id) {
    case SequenceId::A319433:
    case SequenceId::A057843_SHIFTED:
    case SequenceId::A134859_ADAPTED:
      return 2;
    default:
      return 1;
  }
}

WideInt seq_term(SequenceId id, std::int64_t t) {
  if (t < start_index(id)) {
    throw std::out_of_range(std::string(to_string(id)) + ": index " + std::to_string(t) +
                            " below start " + std::to_string(start_index(id)));
  }
  switch (id) {
    case SequenceId::A060144:
      return a060144(t);
    case SequenceId::A183137: {
      WideInt sum = 0;
      for (std::int64_t i = 1; i <= t; ++i) sum += a060144(i);
      return sum;
    }
    case SequenceId::A319433:
      return affine(-1, 1, 2, t + 2) - 1;
    case SequenceId::A003622:
      return floor_phi_squared(t) - 1;
    case SequenceId::A035336:
      return 2 * affine(1, 1, 2, t) + (t - 1);
    case SequenceId::A001950_CONJ4A:
      return floor_phi_squared(t + 1) - 2;
    case SequenceId::A057843_SHIFTED:
      return floor_phi_squared(t) - 3;
    case SequenceId::A134859_ADAPTED:
      return 2 * floor_phi_squared(t) - (t + 2);
    case SequenceId::A000149:
      if (t > static_cast<std::int64_t>(kFloorExpMaxT)) throw std::out_of_range("A000149: index too large");
      return floor_exp(static_cast<unsigned>(t));
  }
  throw std::logic_error("seq_term: unknown id");
}

std::int64_t seq_term64(SequenceId id, std::int64_t t) { return to_int64(seq_term(id, t)); }

std::vector<WideInt> seq_prefix(SequenceId id, std::int64_t count, bool prepend_artificial) {
  std::vector<WideInt> out;
  if (count <= 0) return out;
  if (prepend_artificial) out.emplace_back(1);
  const std::int64_t first = start_index(id);
  if (id == SequenceId::A183137) {
    WideInt sum = 0;
    for (std::int64_t i = 1; i < first + count; ++i) {
      sum += a060144(i);
      if (i >= first) out.push_back(sum);
    }
    return out;
  }
  for (std::int64_t t = first; t < first + count; ++t) out.push_back(seq_term(id, t));
  return out;
}

std::vector<std::int64_t> seq_terms_up_to(SequenceId id, std::int64_t bound) {
  if (!strictly_increasing(id)) {
    throw std::invalid_argument("seq_terms_up_to: id is not strictly increasing");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t t = start_index(id);; ++t) {
    const WideInt v = seq_term(id, t);
    if (v > bound) break;
    out.push_back(to_int64(v));
  }
  return out;
}

std::vector<std::pair<std::int64_t, WideInt>> parse_bfile(std::istream& in) {
  std::vector<std::pair<std::int64_t, WideInt>> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::int64_t index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::runtime_error("parse_bfile: malformed line: " + line);
    }
    try {
      out.emplace_back(index, WideInt(value));
    } catch (const std::exception&) {
      throw std::runtime_error("parse_bfile: bad value: " + line);
    }
  }
  return out;
}

}  // namespace jaco
