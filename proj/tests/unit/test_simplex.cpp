#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ctxstat/error.hpp"
#include "ctxstat/simplex.hpp"

namespace ctxstat::lp {
namespace {

LinearSystem make(std::size_t rows, std::size_t cols, std::vector<double> a, std::vector<double> b) {
  LinearSystem s(rows, cols);
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

TEST(Simplex, FindsFeasiblePoint) {
  // x + y + z = 1, x - y = 0.2
  const auto s = make(2, 3, {1, 1, 1, 1, -1, 0}, {1, 0.2});
  const auto r = solve(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[0] + r.x[1] + r.x[2], 1.0, 1e-12);
  EXPECT_NEAR(r.x[0] - r.x[1], 0.2, 1e-12);
  for (double v : r.x) EXPECT_GE(v, 0.0);
}

TEST(Simplex, NegativeRightHandSide) {
  const auto s = make(1, 2, {-1, -1}, {-2});
  const auto r = solve(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[0] + r.x[1], 2.0, 1e-12);
}

TEST(Simplex, ReportsResidualForInfeasibleSystem) {
  // x + y = 1 and x + y = 2 cannot both hold; phase one leaves one unit.
  const auto s = make(2, 2, {1, 1, 1, 1}, {1, 2});
  const auto r = solve(s);
  EXPECT_FALSE(r.feasible);
  EXPECT_NEAR(r.residual, 1.0, 1e-12);
}

TEST(Simplex, NonNegativityMakesSystemInfeasible) {
  const auto s = make(1, 2, {1, 1}, {-1});
  const auto r = solve(s);
  EXPECT_FALSE(r.feasible);
  EXPECT_NEAR(r.residual, 1.0, 1e-12);
}

TEST(Simplex, PhaseTwoMinimisesObjective) {
  // x + y + z = 1; minimise 3x + y + 2z -> y = 1.
  const auto s = make(1, 3, {1, 1, 1}, {1});
  const std::vector<double> c{3, 1, 2};
  const auto r = solve(s, {}, c);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[1], 1.0, 1e-12);
  const std::vector<double> neg{-3, -1, -2};
  EXPECT_NEAR(solve(s, {}, neg).x[0], 1.0, 1e-12);
}

TEST(Simplex, RedundantRowsAreHandledInPhaseTwo) {
  // Duplicate equality rows leave an artificial basic at zero.
  const auto s = make(3, 3, {1, 1, 0, 1, 1, 0, 0, 1, 1}, {1, 1, 1});
  const std::vector<double> c{1, 0, 1};
  const auto r = solve(s, {}, c);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[1], 1.0, 1e-12);
  EXPECT_NEAR(r.residual, 0.0, 1e-12);
}

TEST(Simplex, Failures) {
  const auto s = make(2, 3, {1, 1, 1, 1, -1, 0}, {1, 0.2});
  SimplexOptions tiny;
  tiny.max_iterations = 1;
  try {
    solve(make(3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1}, {1, 1, 1}), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SolverFailure);
  }
  // x - y = 0 with objective -x is unbounded.
  const std::vector<double> c{-1, 0};
  try {
    solve(make(1, 2, {1, -1}, {0}), {}, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SolverFailure);
  }
  auto bad = s;
  bad.b[0] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(solve(bad), Error);
  const std::vector<double> short_c{1};
  EXPECT_THROW(solve(s, {}, short_c), Error);
}

}  // namespace
}  // namespace ctxstat::lp
