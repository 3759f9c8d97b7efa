#include "jaco/sequences.hpp"

#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "jaco/jaco_graph.hpp"
#include "oracles.hpp"

namespace jaco {
namespace {

std::vector<std::int64_t> prefix64(SequenceId id, std::int64_t count, bool artificial = false) {
  std::vector<std::int64_t> out;
  for (const WideInt& v : seq_prefix(id, count, artificial)) out.push_back(to_int64(v));
  return out;
}

// Excerpts of OEIS b-files.
constexpr const char* kA001950 =
    "# A001950 upper Wythoff sequence\n"
    "1 2\n2 5\n3 7\n4 10\n5 13\n6 15\n7 18\n8 20\n9 23\n10 26\n";
constexpr const char* kA003622 = "1 1\n2 4\n3 6\n4 9\n5 12\n\n6 14\n7 17\n8 19\n9 22\n10 25\n";
constexpr const char* kA000149 =
    "0 1\n1 2\n2 7\n3 20\n4 54\n5 148\n6 403\n7 1096\n8 2980\n9 8103\n10 22026\n";
constexpr const char* kA035336 = "1 2\n2 7\n3 10\n4 15\n5 20\n6 23\n7 28\n8 31\n9 36\n10 41\n";
constexpr const char* kA060144 = "0 0\n1 0\n2 0\n3 1\n4 1\n5 1\n6 2\n7 2\n8 3\n9 3\n10 3\n";

TEST(Sequences, Names) {
  for (SequenceId id : kAllSequences) EXPECT_EQ(parse_sequence_id(to_string(id)), id);
  EXPECT_FALSE(parse_sequence_id("A999999").has_value());
}

TEST(Sequences, StartIndices) {
  EXPECT_EQ(start_index(SequenceId::A319433), 2);
  EXPECT_EQ(start_index(SequenceId::A057843_SHIFTED), 2);
  EXPECT_EQ(start_index(SequenceId::A134859_ADAPTED), 2);
  EXPECT_EQ(start_index(SequenceId::A003622), 1);
  for (SequenceId id : kAllSequences) {
    EXPECT_THROW(seq_term(id, start_index(id) - 1), std::out_of_range) << to_string(id);
  }
}

TEST(Sequences, Examples) {
  EXPECT_EQ(prefix64(SequenceId::A003622, 7), (std::vector<std::int64_t>{1, 4, 6, 9, 12, 14, 17}));
  EXPECT_EQ(prefix64(SequenceId::A035336, 7), (std::vector<std::int64_t>{2, 7, 10, 15, 20, 23, 28}));
  EXPECT_EQ(prefix64(SequenceId::A000149, 6), (std::vector<std::int64_t>{2, 7, 20, 54, 148, 403}));
  EXPECT_EQ(prefix64(SequenceId::A319433, 4), (std::vector<std::int64_t>{1, 2, 2, 3}));
  EXPECT_EQ(prefix64(SequenceId::A183137, 8), (std::vector<std::int64_t>{0, 1, 2, 3, 5, 7, 10, 13}));
  EXPECT_EQ(prefix64(SequenceId::A003622, 3, true), (std::vector<std::int64_t>{1, 1, 4, 6}));
  EXPECT_TRUE(seq_prefix(SequenceId::A060144, 0).empty());
}

TEST(Sequences, MatchBfileExcerpts) {
  auto check = [](const char* text, auto&& expected_at) {
    std::istringstream in(text);
    for (const auto& [t, value] : parse_bfile(in)) {
      if (auto v = expected_at(t)) EXPECT_EQ(*v, value) << t;
    }
  };
  check(kA001950, [](std::int64_t t) -> std::optional<WideInt> {
    if (t < 2) return std::nullopt;
    return seq_term(SequenceId::A001950_CONJ4A, t - 1) + 2;
  });
  check(kA003622, [](std::int64_t t) -> std::optional<WideInt> { return seq_term(SequenceId::A003622, t); });
  check(kA035336, [](std::int64_t t) -> std::optional<WideInt> { return seq_term(SequenceId::A035336, t); });
  check(kA000149, [](std::int64_t t) -> std::optional<WideInt> {
    if (t < 1) return std::nullopt;
    return seq_term(SequenceId::A000149, t);
  });
  check(kA060144, [](std::int64_t t) -> std::optional<WideInt> {
    // The library starts at i = 1 with the shifted index i + 1.
    if (t < 2) return std::nullopt;
    return seq_term(SequenceId::A060144, t - 1);
  });
}

TEST(Sequences, FloatOracleUpTo100k) {
  const oracle::Float phi2 = (3 + boost::multiprecision::sqrt(oracle::Float(5))) / 2;
  auto fl = [](const oracle::Float& x) { return boost::multiprecision::floor(x).convert_to<WideInt>(); };
  for (std::int64_t t = 2; t <= 100000; t += (t < 2000 ? 1 : 37)) {
    ASSERT_EQ(seq_term(SequenceId::A003622, t), fl(t * phi2) - 1) << t;
    ASSERT_EQ(seq_term(SequenceId::A057843_SHIFTED, t), fl(t * phi2) - 3) << t;
    ASSERT_EQ(seq_term(SequenceId::A134859_ADAPTED, t), 2 * fl(t * phi2) - (t + 2)) << t;
    ASSERT_EQ(seq_term(SequenceId::A001950_CONJ4A, t), fl((t + 1) * phi2) - 2) << t;
    ASSERT_EQ(seq_term(SequenceId::A035336, t), 2 * fl(t * (phi2 - 1)) + t - 1) << t;
    ASSERT_EQ(seq_term(SequenceId::A060144, t), oracle::floor_affine_sqrt5(3, -1, 2, t + 1)) << t;
    ASSERT_EQ(seq_term(SequenceId::A319433, t), oracle::floor_affine_sqrt5(-1, 1, 2, t + 2) - 1) << t;
  }
}

TEST(Sequences, PartialSums) {
  const auto terms = seq_prefix(SequenceId::A060144, 5000);
  const auto sums = seq_prefix(SequenceId::A183137, 5000);
  WideInt running = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    running += terms[k];
    ASSERT_EQ(sums[k], running) << k;
  }
  EXPECT_EQ(seq_term(SequenceId::A183137, 5000), running);
}

TEST(Sequences, TermsUpToBound) {
  EXPECT_EQ(seq_terms_up_to(SequenceId::A003622, 17), (std::vector<std::int64_t>{1, 4, 6, 9, 12, 14, 17}));
  EXPECT_EQ(seq_terms_up_to(SequenceId::A000149, 100), (std::vector<std::int64_t>{2, 7, 20, 54}));
  EXPECT_THROW(seq_terms_up_to(SequenceId::A060144, 10), std::invalid_argument);
}

TEST(Sequences, StrictlyIncreasingIds) {
  for (SequenceId id : {SequenceId::A003622, SequenceId::A035336, SequenceId::A001950_CONJ4A,
                        SequenceId::A057843_SHIFTED, SequenceId::A134859_ADAPTED, SequenceId::A000149}) {
    const auto terms = seq_prefix(id, id == SequenceId::A000149 ? 60 : 3000);
    for (std::size_t k = 1; k < terms.size(); ++k) ASSERT_LT(terms[k - 1], terms[k]) << to_string(id) << k;
  }
}

TEST(Sequences, A060144IsT1) {
  for (std::int64_t i = 1; i <= 2000; ++i) ASSERT_EQ(seq_term64(SequenceId::A060144, i), t1_closed(i));
}

TEST(Sequences, Overflow) {
  EXPECT_THROW(seq_term64(SequenceId::A000149, 50), std::overflow_error);
  EXPECT_EQ(seq_term64(SequenceId::A000149, 43), 4727839468229346561);
}

TEST(ParseBfile, CommentsBlankLinesAndErrors) {
  std::istringstream good("# header\n\n1 10\n  2   20  \n3 123456789012345678901234567890\n");
  const auto rows = parse_bfile(good);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].first, 2);
  EXPECT_EQ(rows[1].second, 20);
  EXPECT_EQ(rows[2].second.str(), "123456789012345678901234567890");

  std::istringstream missing("1\n");
  EXPECT_THROW(parse_bfile(missing), std::runtime_error);
  std::istringstream junk("1 x7\n");
  EXPECT_THROW(parse_bfile(junk), std::runtime_error);
}

}  // namespace
}  // namespace jaco
