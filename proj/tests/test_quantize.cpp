#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orthogen/error.hpp"
#include "orthogen/presets.hpp"
#include "orthogen/quantize.hpp"
#include "test_util.hpp"

using namespace orthogen;
using orthogen::test_support::loadGolden;

namespace {

void expectExact(const IntMatrix& im, const DenseMatrix& golden) {
  ASSERT_EQ(im.n, golden.rows());
  for (std::size_t i = 0; i < im.n; ++i)
    for (std::size_t j = 0; j < im.n; ++j)
      EXPECT_EQ(static_cast<double>(im(i, j)), golden(i, j)) << "(" << i << ", " << j << ")";
}

OrthoMatrix preset(Preset p, std::size_t n) { return assembleMatrix(presetValues({p, n})); }

}  // namespace

TEST(Quantize, AutoScale) {
  EXPECT_DOUBLE_EQ(autoScale(8), 64.0 * std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(autoScale(4), 128.0);
}

TEST(Quantize, DctEightMatchesCodecTable) {
  const IntMatrix im = quantizeMatrix(preset(Preset::Dct, 8));
  expectExact(im, loadGolden("golden_dct8_int.csv"));
  EXPECT_EQ(im(1, 0), -89);
  EXPECT_EQ(im(1, 7), 89);
}

TEST(Quantize, DttFourTimes128) { expectExact(quantizeMatrix(preset(Preset::Dtt, 4), 128.0), loadGolden("golden_dtt4_int.csv")); }

TEST(Quantize, DttEightAutoScale) {
  const IntMatrix im = quantizeMatrix(preset(Preset::Dtt, 8));
  expectExact(im, loadGolden("golden_dtt8_int.csv"));
  EXPECT_EQ(im(7, 3), 108);  // 0.5974401 · 181.02 ≈ 108.15
}

TEST(Quantize, RoundsReferenceRealTablesToReferenceIntegers) {
  // Rounding the seven-decimal reference tables must also land on the integer tables.
  expectExact(quantizeMatrix(loadGolden("golden_dct8.csv"), autoScale(8)), loadGolden("golden_dct8_int.csv"));
  expectExact(quantizeMatrix(loadGolden("golden_dtt4.csv"), 128.0), loadGolden("golden_dtt4_int.csv"));
  expectExact(quantizeMatrix(loadGolden("golden_dtt8.csv"), autoScale(8)), loadGolden("golden_dtt8_int.csv"));
}

TEST(Quantize, SingleValueWithRootTwo) {
  const IntMatrix im = quantizeMatrix(assembleMatrix(ValueSet({1.0})), std::sqrt(2.0));
  EXPECT_EQ(im.entries, (std::vector<std::int64_t>{1, 1, -1, 1}));
}

TEST(Quantize, TiesRoundAwayFromZero) {
  const IntMatrix im = quantizeMatrix(DenseMatrix{{0.5, -0.5}, {1.5, -2.5}}, 1.0);
  EXPECT_EQ(im.entries, (std::vector<std::int64_t>{1, -1, 2, -3}));
}

TEST(Quantize, RejectsBadScale) {
  EXPECT_THROW(quantizeMatrix(DenseMatrix::identity(2), 0.0), Error);
  EXPECT_THROW(quantizeMatrix(DenseMatrix::identity(2), -3.0), Error);
  EXPECT_THROW(quantizeMatrix(DenseMatrix(2, 3), 1.0), Error);
}

TEST(DequantizeError, WithinHalfStep) {
  for (Preset p : {Preset::Dct, Preset::Dtt, Preset::Triangular, Preset::Prime, Preset::Fibonacci}) {
    for (double scale : {1.0, 10.0, 128.0, autoScale(8), 4096.0}) {
      const IntMatrix im = quantizeMatrix(preset(p, 8), scale);
      EXPECT_LE(dequantizeError(im), 0.5 / scale + 1e-15);
    }
  }
}

TEST(DequantizeError, ReferenceIntegerVsRealTable) {
  IntMatrix im = quantizeMatrix(loadGolden("golden_dct8.csv"), autoScale(8));
  const double err = dequantizeError(im);
  EXPECT_LE(err, 0.5 / autoScale(8));  // ≈ 2.77e-3
  EXPECT_GT(err, 0.0);
}

TEST(DequantizeError, BoundShrinksWithScale) {
  const OrthoMatrix m = preset(Preset::Dtt, 8);
  double prevBound = 1.0;
  for (double scale = 2.0; scale < 1e6; scale *= 4.0) {
    const double err = dequantizeError(quantizeMatrix(m, scale));
    EXPECT_LE(err, 0.5 / scale + 1e-15);
    EXPECT_LT(0.5 / scale, prevBound);
    prevBound = 0.5 / scale;
  }
}

TEST(QuantizeProperty, DctRoundTripNearlyOrthogonal) {
  EXPECT_LE(orthogonalityResidual(quantizeMatrix(preset(Preset::Dct, 8))), 0.05);
}

TEST(QuantizeProperty, OddSymmetry) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    DenseMatrix a(n, n), neg(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // Half-integers after scaling exercise the tie rule.
        a(i, j) = trial % 2 ? std::round(u(rng) * 64.0) / 128.0 : u(rng);
        neg(i, j) = -a(i, j);
      }
    const IntMatrix qa = quantizeMatrix(a, 64.0), qn = quantizeMatrix(neg, 64.0);
    for (std::size_t k = 0; k < qa.entries.size(); ++k) EXPECT_EQ(qn.entries[k], -qa.entries[k]);
  }
}

TEST(QuantizeProperty, EntriesBoundedByScale) {
  for (std::size_t n = 2; n <= 16; n += 2) {
    const IntMatrix im = quantizeMatrix(preset(Preset::Dct, n));
    for (auto v : im.entries) EXPECT_LE(std::abs(static_cast<double>(v)), std::ceil(im.scale));
  }
}
