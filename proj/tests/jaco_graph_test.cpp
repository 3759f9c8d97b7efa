#include "jaco/jaco_graph.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <gtest/gtest.h>

#include "jaco/table1.hpp"
#include "oracles.hpp"

namespace jaco {
namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const JacoGraph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 1; i <= g.order(); ++i) {
    for (Vertex j = i + 1; j <= g.order(); ++j) {
      if (g.adjacent(i, j)) out.emplace(i, j);
    }
  }
  return out;
}

TEST(BuildJaco, FigureJ8) {
  const JacoGraph g = build_jaco(8);
  std::set<std::pair<Vertex, Vertex>> expected;
  std::istringstream in{std::string(kJ8Edges)};
  for (Vertex i, j; in >> i >> j;) expected.emplace(i, j);
  EXPECT_EQ(expected.size(), 13u);
  EXPECT_EQ(edge_set(g), expected);
  EXPECT_EQ(g.edge_count(), 13);
}

TEST(BuildJaco, SmallOrders) {
  EXPECT_EQ(build_jaco(1).edge_count(), 0);
  const JacoGraph two = build_jaco(2);
  EXPECT_EQ(two.edge_count(), 1);
  EXPECT_TRUE(two.adjacent(1, 2));
  const JacoGraph three = build_jaco(3);
  EXPECT_EQ(edge_set(three), (std::set<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}}));
}

TEST(BuildJaco, RejectsEmptyGraph) {
  EXPECT_THROW(build_jaco(0), std::invalid_argument);
  EXPECT_THROW(build_jaco(-4), std::invalid_argument);
}

TEST(BuildJaco, MatchesEdgeByEdgeReplay) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const JacoGraph g = build_jaco(n);
    const auto adj = oracle::jaco_adjacency(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        ASSERT_EQ(g.adjacent(i, j), adj[i][j]) << "n=" << n << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(BuildJaco, StructuralInvariants) {
  const JacoGraph g = build_jaco(5000);
  std::int64_t forward = 0;
  for (Vertex i = 1; i <= g.order(); ++i) {
    ASSERT_LE(g.lo(i), i);
    ASSERT_GE(g.hi(i), i);
    ASSERT_LE(g.degree(i), std::max<Vertex>(i, 1));
    if (i > 1) {
      ASSERT_GE(g.hi(i), g.hi(i - 1));
      ASSERT_GE(g.lo(i), g.lo(i - 1));
    }
    forward += g.hi(i) - i;
  }
  EXPECT_EQ(forward, g.edge_count());
  // j <= hi(i) iff lo(j) <= i, spot-checked on a window.
  for (Vertex i = 1000; i < 1100; ++i) {
    for (Vertex j = i + 1; j < 1300; ++j) ASSERT_EQ(j <= g.hi(i), g.lo(j) <= i);
  }
}

TEST(BuildJaco, PrefixOfLargerGraphIsSmallerGraph) {
  const JacoGraph big = build_jaco(400);
  for (std::int64_t n = 1; n <= 400; ++n) {
    const JacoGraph g = build_jaco(n);
    for (Vertex i = 1; i <= n; ++i) {
      ASSERT_EQ(g.lo(i), big.lo(i)) << n << " " << i;
      ASSERT_EQ(g.hi(i), std::min(big.hi(i), n)) << n << " " << i;
    }
  }
}

TEST(T1, TableExamples) {
  const JacoGraph g = build_jaco(32);
  EXPECT_EQ(g.t1(8), 3);
  EXPECT_EQ(g.t1(1), 0);
  EXPECT_EQ(g.t1(25), 9);
  EXPECT_THROW(g.t1(33), std::out_of_range);
  EXPECT_THROW(g.t1(0), std::out_of_range);
}

TEST(T1Closed, Examples) {
  EXPECT_EQ(t1_closed(5), 2);
  EXPECT_EQ(t1_closed(13), 5);
  EXPECT_EQ(oracle::floor_affine_sqrt5(3, -1, 2, 1001), 382);
  EXPECT_EQ(t1_closed(1000), 382);
  EXPECT_EQ(build_jaco(1001).t1(1000), 382);
  EXPECT_THROW(t1_closed(0), std::out_of_range);
}

TEST(T1Closed, MatchesConstructionUpTo100k) {
  // Prefix stability carries this to every J_n with n <= 100000.
  const JacoGraph g = build_jaco(100000);
  for (Vertex i = 1; i <= g.order(); ++i) ASSERT_EQ(g.t1(i), t1_closed(i)) << "i=" << i;
}

TEST(T2Star, Examples) {
  EXPECT_EQ(t2_star(4), 3);
  EXPECT_EQ(t2_star(1), 1);
  EXPECT_EQ(t2_star(20), 12);
}

TEST(T2Star, IsForwardReachAwayFromTheEnd) {
  const JacoGraph g = build_jaco(3000);
  for (Vertex i = 1; i <= 1000; ++i) ASSERT_EQ(g.t2(i), t2_star(i)) << i;
}

TEST(Neighborhood, FigureJ8) {
  const JacoGraph g = build_jaco(8);
  EXPECT_EQ(g.neighborhood(5), (VertexRange{3, 8}));
  EXPECT_EQ(g.neighborhood(1), (VertexRange{1, 2}));
  EXPECT_EQ(g.neighborhood(8), (VertexRange{5, 8}));
  EXPECT_THROW(g.neighborhood(9), std::out_of_range);
}

}  // namespace
}  // namespace jaco
