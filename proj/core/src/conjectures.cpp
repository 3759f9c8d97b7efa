#include "jaco/conjectures.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jaco/dompath.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

namespace {

constexpr ConjectureId kAllIds[] = {
    ConjectureId::P1,  ConjectureId::C1,  ConjectureId::C1_recursive, ConjectureId::C1_identity,
    ConjectureId::C2,  ConjectureId::C3,  ConjectureId::C4a,          ConjectureId::C4b,
    ConjectureId::C4c, ConjectureId::C4_trichotomy, ConjectureId::C5, ConjectureId::C6,
    ConjectureId::C7,
};

// "C4a" -> "C4", "C1-recursive" -> "C1".
std::string group_of(ConjectureId id) {
  std::string name(to_string(id));
  if (const auto dash = name.find('-'); dash != std::string::npos) name.resize(dash);
  if (!name.empty() && name.back() >= 'a' && name.back() <= 'z') name.pop_back();
  return name;
}

std::int64_t order_count(const DegreeSweep& sweep) {
  return static_cast<std::int64_t>(sweep.delta.size());
}

void require_sweep(const DegreeSweep& sweep, std::int64_t minimum, const char* what) {
  if (order_count(sweep) < minimum) {
    throw std::invalid_argument(std::string(what) + ": sweep must reach n >= " + std::to_string(minimum));
  }
}

ConjectureReport make_report(ConjectureId id, std::int64_t lo, std::int64_t hi, std::int64_t margin = 0) {
  ConjectureReport report;
  report.id = id;
  report.range_lo = lo;
  report.range_hi = hi;
  report.truncation_margin = margin;
  return report;
}

void record(ConjectureReport& report, Witness witness) {
  if (report.witness) return;
  report.status = Status::counterexample;
  report.witness = witness;
}

// Compares two lists position by position; sequence index = first_index + position.
std::optional<Witness> first_difference(const std::vector<std::int64_t>& observed,
                                        const std::vector<std::int64_t>& predicted,
                                        std::int64_t first_index) {
  const std::size_t common = std::min(observed.size(), predicted.size());
  for (std::size_t p = 0; p < common; ++p) {
    if (observed[p] != predicted[p]) {
      return Witness{first_index + static_cast<std::int64_t>(p), predicted[p], observed[p]};
    }
  }
  if (observed.size() == predicted.size()) return std::nullopt;
  Witness w{first_index + static_cast<std::int64_t>(common), std::nullopt, std::nullopt};
  if (common < predicted.size()) w.expected = predicted[common];
  if (common < observed.size()) w.actual = observed[common];
  return w;
}

std::size_t matching_prefix(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::size_t p = 0;
  while (p < a.size() && p < b.size() && a[p] == b[p]) ++p;
  return p;
}

// Terms a(t), t >= first, with a(t) <= bound.
std::vector<std::int64_t> terms_from(SequenceId id, std::int64_t first, std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = first;; ++t) {
    const std::int64_t v = seq_term64(id, t);
    if (v > bound) break;
    out.push_back(v);
  }
  return out;
}

// Delta(J_{N - margin}); max degrees at or above it may still repeat later.
std::int64_t trusted_delta_cutoff(const DegreeSweep& sweep, std::int64_t margin) {
  const std::int64_t last_trusted = order_count(sweep) - margin;
  if (last_trusted < 2) throw std::invalid_argument("sweep too short for its truncation margin");
  return sweep.delta[last_trusted - 1];
}

std::map<std::int64_t, std::int64_t> max_degree_multiplicity(const DegreeSweep& sweep) {
  std::map<std::int64_t, std::int64_t> count;
  for (std::int64_t n = 2; n <= order_count(sweep); ++n) ++count[sweep.delta[n - 1]];
  return count;
}

}  // namespace

std::string_view to_string(ConjectureId id) {
  switch (id) {
    case ConjectureId::P1:
      return "P1";
    case ConjectureId::C1:
      return "C1";
    case ConjectureId::C1_recursive:
      return "C1-recursive";
    case ConjectureId::C1_identity:
      return "C1-identity";
    case ConjectureId::C2:
      return "C2";
    case ConjectureId::C3:
      return "C3";
    case ConjectureId::C4a:
      return "C4a";
    case ConjectureId::C4b:
      return "C4b";
    case ConjectureId::C4c:
      return "C4c";
    case ConjectureId::C4_trichotomy:
      return "C4-trichotomy";
    case ConjectureId::C5:
      return "C5";
    case ConjectureId::C6:
      return "C6";
    case ConjectureId::C7:
      return "C7";
  }
  return "unknown";
}

std::optional<ConjectureId> parse_conjecture_id(std::string_view text) {
  for (ConjectureId id : kAllIds) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Status status) {
  return status == Status::verified ? "verified" : "counterexample";
}

std::int64_t truncation_margin(std::int64_t max_n) {
  return std::min<std::int64_t>(50, std::max<std::int64_t>(1, max_n / 10));
}

ConjectureReport check_p1(std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("check_p1: N must be >= 1");
  auto report = make_report(ConjectureId::P1, 1, max_n);
  const auto sizes = prefix_sizes(build_jaco(max_n));
  const auto predicted = seq_prefix(SequenceId::A183137, max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const std::int64_t expected = to_int64(predicted[n - 1]);
    if (sizes[n - 1] != expected) {
      record(report, {n, expected, sizes[n - 1]});
      break;
    }
  }
  return report;
}

std::vector<ConjectureReport> check_c1(const DegreeSweep& sweep) {
  require_sweep(sweep, 2, "check_c1");
  const std::int64_t max_n = order_count(sweep);
  auto closed = make_report(ConjectureId::C1, 2, max_n);
  auto recursive = make_report(ConjectureId::C1_recursive, 2, max_n);
  auto identity = make_report(ConjectureId::C1_identity, 2, max_n);
  for (std::int64_t n = 2; n <= max_n; ++n) {
    const std::int64_t delta = sweep.delta[n - 1];
    const std::int64_t formula = seq_term64(SequenceId::A319433, n);
    const std::int64_t split = delta_recursive(n);
    if (delta != formula) record(closed, {n, formula, delta});
    if (delta != split) record(recursive, {n, split, delta});
    if (split != formula) record(identity, {n, formula, split});
  }
  return {closed, recursive, identity};
}

std::vector<ConjectureReport> check_c1(std::int64_t max_n) {
  if (max_n < 2) throw std::invalid_argument("check_c1: N must be >= 2");
  return check_c1(degree_sweep(max_n));
}

std::vector<std::int64_t> unique_max_degrees(const DegreeSweep& sweep, std::int64_t margin) {
  const std::int64_t cutoff = trusted_delta_cutoff(sweep, margin);
  std::vector<std::int64_t> out;
  for (const auto& [value, count] : max_degree_multiplicity(sweep)) {
    if (value < cutoff && count == 1) out.push_back(value);
  }
  return out;
}

std::vector<std::int64_t> orders_with_unique_max_degree(const DegreeSweep& sweep, std::int64_t margin) {
  const std::int64_t cutoff = trusted_delta_cutoff(sweep, margin);
  const auto count = max_degree_multiplicity(sweep);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= order_count(sweep); ++n) {
    const std::int64_t delta = sweep.delta[n - 1];
    if (delta < cutoff && count.at(delta) == 1) out.push_back(n);
  }
  return out;
}

ConjectureReport check_c2(const DegreeSweep& sweep) {
  require_sweep(sweep, 10, "check_c2");
  const std::int64_t max_n = order_count(sweep);
  const std::int64_t margin = truncation_margin(max_n);
  auto report = make_report(ConjectureId::C2, 2, max_n, margin);
  const std::int64_t cutoff = trusted_delta_cutoff(sweep, margin);
  const auto observed = unique_max_degrees(sweep, margin);
  const auto predicted = terms_from(SequenceId::A003622, 1, cutoff - 1);
  report.offset = 1;
  if (auto w = first_difference(observed, predicted, 1)) record(report, *w);
  return report;
}

ConjectureReport check_c2(std::int64_t max_n) {
  if (max_n < 10) throw std::invalid_argument("check_c2: N must be >= 10");
  return check_c2(degree_sweep(max_n));
}

ConjectureReport check_c3(const DegreeSweep& sweep) {
  require_sweep(sweep, 10, "check_c3");
  const std::int64_t max_n = order_count(sweep);
  const std::int64_t margin = truncation_margin(max_n);
  auto report = make_report(ConjectureId::C3, 2, max_n, margin);
  const std::int64_t cutoff = trusted_delta_cutoff(sweep, margin);
  // Orders below the first n whose max degree reaches the cutoff are settled.
  std::int64_t settled_below = max_n + 1;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    if (sweep.delta[n - 1] >= cutoff) {
      settled_below = n;
      break;
    }
  }
  const auto observed = orders_with_unique_max_degree(sweep, margin);

  // Align by the longest matching prefix over a few candidate start indices.
  constexpr std::int64_t kStatedStart = 3;
  std::int64_t best_start = 1;
  std::size_t best_match = 0;
  for (std::int64_t start = 1; start <= 5; ++start) {
    const auto predicted = terms_from(SequenceId::A035336, start, settled_below - 1);
    const std::size_t match = matching_prefix(observed, predicted);
    if (match > best_match) {
      best_match = match;
      best_start = start;
    }
  }
  const auto predicted = terms_from(SequenceId::A035336, best_start, settled_below - 1);
  report.offset = best_start;
  if (best_start != kStatedStart) {
    report.note = "aligned from t=" + std::to_string(best_start) + "; stated start is t=3";
  }
  if (auto w = first_difference(observed, predicted, best_start)) record(report, *w);
  return report;
}

ConjectureReport check_c3(std::int64_t max_n) {
  if (max_n < 10) throw std::invalid_argument("check_c3: N must be >= 10");
  return check_c3(degree_sweep(max_n));
}

std::vector<std::int64_t> orders_with_delta_set_size(const DegreeSweep& sweep, std::size_t card,
                                                     std::int64_t margin) {
  const std::int64_t last = order_count(sweep) - margin;
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= last; ++n) {
    if (sweep.delta_set[n - 1].size() == card) out.push_back(n);
  }
  return out;
}

std::vector<ConjectureReport> check_c4(const DegreeSweep& sweep) {
  require_sweep(sweep, 10, "check_c4");
  const std::int64_t max_n = order_count(sweep);
  const std::int64_t margin = truncation_margin(max_n);
  const std::int64_t last = max_n - margin;

  struct Part {
    ConjectureId id;
    std::size_t card;
    SequenceId sequence;
  };
  const Part parts[] = {
      {ConjectureId::C4a, 1, SequenceId::A001950_CONJ4A},
      {ConjectureId::C4b, 2, SequenceId::A057843_SHIFTED},
      {ConjectureId::C4c, 3, SequenceId::A134859_ADAPTED},
  };
  std::vector<ConjectureReport> reports;
  for (const Part& part : parts) {
    auto report = make_report(part.id, 2, last, margin);
    const std::int64_t start = start_index(part.sequence);
    report.offset = start;
    const auto observed = orders_with_delta_set_size(sweep, part.card, margin);
    const auto predicted = terms_from(part.sequence, start, last);
    if (auto w = first_difference(observed, predicted, start)) record(report, *w);
    reports.push_back(std::move(report));
  }

  auto other = make_report(ConjectureId::C4_trichotomy, 2, last, margin);
  for (std::int64_t n = 2; n <= last; ++n) {
    const auto card = static_cast<std::int64_t>(sweep.delta_set[n - 1].size());
    if (card < 1 || card > 3) {
      record(other, {n, std::nullopt, card});
      break;
    }
  }
  reports.push_back(std::move(other));
  return reports;
}

std::vector<ConjectureReport> check_c4(std::int64_t max_n) {
  if (max_n < 10) throw std::invalid_argument("check_c4: N must be >= 10");
  return check_c4(degree_sweep(max_n));
}

std::vector<std::int64_t> never_singleton_subscripts(const DegreeSweep& sweep, std::int64_t margin) {
  const std::int64_t max_n = order_count(sweep);
  const std::int64_t last_trusted = max_n - margin;
  if (last_trusted < 2) throw std::invalid_argument("sweep too short for its truncation margin");
  // Max-degree vertices drift right as n grows, so subscripts left of the
  // Delta-set of J_{N - margin} have had every chance to appear alone.
  const Vertex limit = sweep.delta_set[last_trusted - 1].front() - 1;
  std::vector<bool> singleton(limit + 1, false);
  for (std::int64_t n = 2; n <= max_n; ++n) {
    const auto& set = sweep.delta_set[n - 1];
    if (set.size() == 1 && set.front() <= limit) singleton[set.front()] = true;
  }
  std::vector<std::int64_t> out;
  for (Vertex i = 1; i <= limit; ++i) {
    if (!singleton[i]) out.push_back(i);
  }
  return out;
}

ConjectureReport check_c5(const DegreeSweep& sweep) {
  require_sweep(sweep, 10, "check_c5");
  const std::int64_t max_n = order_count(sweep);
  const std::int64_t margin = truncation_margin(max_n);
  auto report = make_report(ConjectureId::C5, 2, max_n, margin);
  const auto observed = never_singleton_subscripts(sweep, margin);
  const std::int64_t limit = sweep.delta_set[max_n - margin - 1].front() - 1;
  // Artificial leading 1 in position t = 1, then A003622 from t = 2.
  std::vector<std::int64_t> predicted{1};
  if (limit < 1) predicted.clear();
  for (std::int64_t v : terms_from(SequenceId::A003622, 2, limit)) predicted.push_back(v);
  report.offset = 2;
  report.note = "leading artificial term 1";
  if (auto w = first_difference(observed, predicted, 1)) record(report, *w);
  return report;
}

ConjectureReport check_c5(std::int64_t max_n) {
  if (max_n < 10) throw std::invalid_argument("check_c5: N must be >= 10");
  return check_c5(degree_sweep(max_n));
}

ConjectureReport check_c6(std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("check_c6: N must be >= 1");
  auto report = make_report(ConjectureId::C6, 1, max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const std::int64_t diam = diameter(build_jaco(n));
    const std::int64_t length = primary_dom_path(n).edge_length();
    if (length - diam < 0 || length - diam > 1) {
      record(report, {n, diam, length});
      break;
    }
  }
  report.note = "witness expected=diameter, actual=dom-path length";
  return report;
}

ConjectureReport check_c7(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("check_c7: K must be >= 1");
  auto report = make_report(ConjectureId::C7, 1, k);
  const auto middles = conjecture7_subscripts(k);
  for (std::int64_t t = 1; t <= k; ++t) {
    const std::int64_t predicted = to_int64(floor_exp(static_cast<unsigned>(t)));
    if (middles[t - 1] != predicted) {
      record(report, {t, predicted, middles[t - 1]});
      break;
    }
  }
  report.offset = 1;
  return report;
}

std::int64_t conjecture7_terms_within(std::int64_t max_n) {
  std::int64_t count = 0;
  for (std::int64_t m : conjecture7_subscripts(kMaxConjecture7Terms)) {
    if (m > max_n) break;
    ++count;
  }
  return std::max<std::int64_t>(count, 1);
}

std::vector<ConjectureReport> run_checks(std::int64_t max_n, std::optional<std::string> only) {
  if (max_n < 10) throw std::invalid_argument("run_checks: N must be >= 10");
  if (only && *only != "all") {
    const bool known = std::any_of(std::begin(kAllIds), std::end(kAllIds), [&](ConjectureId id) {
      return to_string(id) == *only || group_of(id) == *only;
    });
    if (!known) throw std::invalid_argument("unknown conjecture id: " + *only);
  } else {
    only.reset();
  }
  auto wanted = [&](ConjectureId id) {
    return !only || to_string(id) == *only || group_of(id) == *only;
  };
  auto wanted_group = [&](const char* group) {
    return std::any_of(std::begin(kAllIds), std::end(kAllIds),
                       [&](ConjectureId id) { return group_of(id) == group && wanted(id); });
  };

  std::optional<DegreeSweep> sweep;
  auto degrees = [&]() -> const DegreeSweep& {
    if (!sweep) sweep = degree_sweep(max_n);
    return *sweep;
  };

  std::vector<ConjectureReport> out;
  auto keep = [&](std::vector<ConjectureReport> reports) {
    for (auto& r : reports) {
      if (wanted(r.id)) out.push_back(std::move(r));
    }
  };
  if (wanted(ConjectureId::P1)) out.push_back(check_p1(max_n));
  if (wanted_group("C1")) keep(check_c1(degrees()));
  if (wanted(ConjectureId::C2)) out.push_back(check_c2(degrees()));
  if (wanted(ConjectureId::C3)) out.push_back(check_c3(degrees()));
  if (wanted_group("C4")) keep(check_c4(degrees()));
  if (wanted(ConjectureId::C5)) out.push_back(check_c5(degrees()));
  if (wanted(ConjectureId::C6)) out.push_back(check_c6(max_n));
  if (wanted(ConjectureId::C7)) out.push_back(check_c7(conjecture7_terms_within(max_n)));
  return out;
}

std::string to_text(const ConjectureReport& report) {
  std::ostringstream out;
  out << to_string(report.id) << " range=[" << report.range_lo << "," << report.range_hi << "] "
      << to_string(report.status) << " margin=" << report.truncation_margin;
  if (report.offset) out << " offset=" << *report.offset;
  if (report.witness) {
    auto side = [](const std::optional<std::int64_t>& v) {
      return v ? std::to_string(*v) : std::string("none");
    };
    out << " witness=(index=" << report.witness->index << ", expected=" << side(report.witness->expected)
        << ", actual=" << side(report.witness->actual) << ")";
  }
  if (!report.note.empty()) out << " note=\"" << report.note << "\"";
  return out.str();
}

nlohmann::json to_json(const ConjectureReport& report) {
  nlohmann::json j;
  j["id"] = to_string(report.id);
  j["range"] = {report.range_lo, report.range_hi};
  j["status"] = to_string(report.status);
  if (report.witness) {
    nlohmann::json w;
    w["index"] = report.witness->index;
    w["expected"] = report.witness->expected ? nlohmann::json(*report.witness->expected) : nlohmann::json();
    w["actual"] = report.witness->actual ? nlohmann::json(*report.witness->actual) : nlohmann::json();
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["margin"] = report.truncation_margin;
  j["offset"] = report.offset ? nlohmann::json(*report.offset) : nlohmann::json();
  j["note"] = report.note;
  return j;
}

}  // namespace jaco
