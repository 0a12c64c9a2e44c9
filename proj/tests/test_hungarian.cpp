#include <random>

#include <gtest/gtest.h>

#include "dcfw/hungarian.hpp"
#include "dcfw/lmo.hpp"
#include "oracles.hpp"

namespace dcfw {
namespace {

Matrix integer_costs(std::mt19937_64& rng, Index n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix c(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) c(i, j) = dist(rng);
  }
  return c;
}

bool is_permutation(const std::vector<Index>& p) {
  std::vector<bool> seen(p.size(), false);
  for (Index j : p) {
    if (j < 0 || j >= static_cast<Index>(p.size()) || seen[static_cast<std::size_t>(j)]) {
      return false;
    }
    seen[static_cast<std::size_t>(j)] = true;
  }
  return true;
}

TEST(Hungarian, SmallHandExample) {
  Matrix c(3, 3);
  c << 4, 1, 3,
       2, 0, 5,
       3, 2, 2;
  const auto p = solve_assignment(c);
  EXPECT_EQ(assignment_cost(c, p), 5.0);
  EXPECT_EQ(p, (std::vector<Index>{1, 0, 2}));
}

TEST(Hungarian, SingleEntry) {
  Matrix c(1, 1);
  c << -7.5;
  EXPECT_EQ(solve_assignment(c), std::vector<Index>{0});
}

TEST(Hungarian, MatchesBruteForceOnIntegerCosts) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 1 + trial % 7;
    const Matrix c = integer_costs(rng, n, -20, 20);
    const auto p = solve_assignment(c);
    ASSERT_TRUE(is_permutation(p));
    ASSERT_EQ(assignment_cost(c, p), testing::brute_force_assignment(c));
  }
}

TEST(Hungarian, MatchesBruteForceOnRealCosts) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 2 + trial % 6;
    const Matrix c = testing::random_matrix(rng, n, n, -1e3, 1e3);
    const auto p = solve_assignment(c);
    ASSERT_NEAR(assignment_cost(c, p), testing::brute_force_assignment(c), 1e-9);
  }
}

TEST(Hungarian, HeavilyTiedCosts) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix c = integer_costs(rng, 6, 0, 1);
    ASSERT_EQ(assignment_cost(c, solve_assignment(c)),
              testing::brute_force_assignment(c));
  }
  EXPECT_EQ(assignment_cost(Matrix::Zero(5, 5), solve_assignment(Matrix::Zero(5, 5))), 0.0);
}

TEST(Hungarian, LargeInstanceBeatsIdentity) {
  std::mt19937_64 rng(31);
  const Index n = 120;
  const Matrix c = testing::random_matrix(rng, n, n, 0.0, 1.0);
  const auto p = solve_assignment(c);
  ASSERT_TRUE(is_permutation(p));
  EXPECT_LE(assignment_cost(c, p), c.trace());
}

TEST(Hungarian, NoSwapImproves) {
  std::mt19937_64 rng(37);
  const Index n = 40;
  const Matrix c = testing::random_matrix(rng, n, n);
  const auto p = solve_assignment(c);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const double now = c(a, p[a]) + c(b, p[b]);
      const double swapped = c(a, p[b]) + c(b, p[a]);
      ASSERT_LE(now, swapped + 1e-12);
    }
  }
}

TEST(Hungarian, RejectsBadInput) {
  EXPECT_THROW(solve_assignment(Matrix::Zero(2, 3)), ContractViolation);
  Matrix c = Matrix::Zero(2, 2);
  c(0, 1) = INFINITY;
  EXPECT_THROW(solve_assignment(c), ContractViolation);
}

TEST(Hungarian, Deterministic) {
  std::mt19937_64 rng(41);
  const Matrix c = integer_costs(rng, 8, 0, 3);
  EXPECT_EQ(solve_assignment(c), solve_assignment(c));
}

}  // namespace
}  // namespace dcfw
