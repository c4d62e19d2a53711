#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "orthogen/error.hpp"
#include "orthogen/linsolve.hpp"

using namespace orthogen;

namespace {

DenseMatrix randomWellConditioned(std::mt19937_64& rng, std::size_t t) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix a(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < t; ++j) {
      a(i, j) = u(rng);
      if (i != j) off += std::abs(a(i, j));
    }
    // Strict diagonal dominance keeps the condition number modest.
    a(i, i) = (a(i, i) < 0 ? -1.0 : 1.0) * (off + 1.0);
  }
  return a;
}

}  // namespace

TEST(Solve, OneByOne) {
  const Vector x = solve(DenseMatrix{{1.0}}, Vector{5.0});
  ASSERT_EQ(x.size(), 1u);
  EXPECT_DOUBLE_EQ(x[0], 5.0);
}

TEST(Solve, Diagonal) {
  const Vector x = solve(DenseMatrix{{2.0, 0.0}, {0.0, 4.0}}, Vector{2.0, 8.0});
  EXPECT_DOUBLE_EQ(x[0], 1.0);
  EXPECT_DOUBLE_EQ(x[1], 2.0);
}

TEST(Solve, TwoByTwoByHand) {
  // x + y = 3, x − y = 1  ⇒  x = 2, y = 1
  const Vector x = solve(DenseMatrix{{1.0, 1.0}, {1.0, -1.0}}, Vector{3.0, 1.0});
  EXPECT_NEAR(x[0], 2.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
}

TEST(Solve, NeedsPivoting) {
  // Zero leading entry: fails without row exchange.
  const Vector x = solve(DenseMatrix{{0.0, 1.0}, {1.0, 0.0}}, Vector{7.0, 3.0});
  EXPECT_DOUBLE_EQ(x[0], 3.0);
  EXPECT_DOUBLE_EQ(x[1], 7.0);
}

TEST(Solve, RankDeficientThrowsSingular) {
  try {
    solve(DenseMatrix{{1.0, 2.0}, {2.0, 4.0}}, Vector{1.0, 2.0});
    FAIL() << "expected SingularSystem";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularSystem);
  }
}

TEST(Solve, ZeroMatrixThrowsSingular) {
  EXPECT_THROW(solve(DenseMatrix(3, 3), Vector{1.0, 2.0, 3.0}), Error);
}

TEST(Solve, ShapeErrors) {
  EXPECT_THROW(solve(DenseMatrix(2, 3), Vector{1.0, 2.0}), Error);
  EXPECT_THROW(solve(DenseMatrix::identity(2), Vector{1.0}), Error);
}

TEST(DenseMatrixTest, RejectsNonFinite) {
  EXPECT_THROW((DenseMatrix{{1.0, std::numeric_limits<double>::quiet_NaN()}}), Error);
  EXPECT_THROW(DenseMatrix(1, 1, {std::numeric_limits<double>::infinity()}), Error);
  EXPECT_THROW(DenseMatrix(0, 1), Error);
  EXPECT_THROW(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
}

TEST(Determinant, Examples) {
  EXPECT_DOUBLE_EQ(determinant(DenseMatrix{{3.0}}), 3.0);
  EXPECT_DOUBLE_EQ(determinant(DenseMatrix::identity(2)), 1.0);
  // Cofactor expansion: 1·4 − 2·3
  EXPECT_NEAR(determinant(DenseMatrix{{1.0, 2.0}, {3.0, 4.0}}), -2.0, 1e-15);
}

TEST(Determinant, SingularIsZero) {
  EXPECT_NEAR(determinant(DenseMatrix{{1.0, 2.0}, {2.0, 4.0}}), 0.0, 1e-15);
  EXPECT_EQ(determinant(DenseMatrix(3, 3)), 0.0);
}

TEST(Determinant, MatchesCofactorOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t t = 1 + trial % 6;
    DenseMatrix a(t, t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) a(i, j) = u(rng);
    const double ref = oracles::cofactorDeterminant(a);
    EXPECT_NEAR(determinant(a), ref, 1e-12 * std::max(1.0, std::abs(ref))) << "t=" << t;
  }
}

TEST(SolveProperty, ResidualSmallForRandomSystems) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t t = 1 + trial % 8;
    const DenseMatrix a = randomWellConditioned(rng, t);
    Vector rhs(t);
    for (double& r : rhs) r = u(rng);
    const Vector x = solve(a, rhs);
    const Vector ax = multiply(a, x);
    double res = 0.0;
    for (std::size_t i = 0; i < t; ++i) res = std::max(res, std::abs(ax[i] - rhs[i]));
    EXPECT_LE(res, 1e-10 * std::max(1.0, maxAbs(rhs)));
  }
}

TEST(SolveProperty, DeterminantOfInverseIsReciprocal) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t t = 1 + trial % 8;
    const DenseMatrix a = randomWellConditioned(rng, t);
    DenseMatrix inv(t, t);
    for (std::size_t j = 0; j < t; ++j) {
      Vector e(t, 0.0);
      e[j] = 1.0;
      const Vector col = solve(a, e);
      for (std::size_t i = 0; i < t; ++i) inv(i, j) = col[i];
    }
    EXPECT_NEAR(determinant(a) * determinant(inv), 1.0, 1e-8);
  }
}
