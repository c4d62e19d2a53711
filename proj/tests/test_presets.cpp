#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "orthogen/error.hpp"
#include "orthogen/presets.hpp"

using namespace orthogen;

namespace {

std::vector<double> valuesOf(Preset p, std::size_t n) {
  const ValueSet vs = presetValues({p, n});
  return {vs.values().begin(), vs.values().end()};
}

}  // namespace

TEST(Presets, DctEight) {
  const auto v = valuesOf(Preset::Dct, 8);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_NEAR(v[0], 0.98079, 5e-6);
  EXPECT_NEAR(v[1], 0.83147, 5e-6);
  EXPECT_NEAR(v[2], 0.55557, 5e-6);
  EXPECT_NEAR(v[3], 0.19509, 5e-6);
  EXPECT_DOUBLE_EQ(v[0], std::cos(std::numbers::pi / 16));
  EXPECT_DOUBLE_EQ(v[3], std::cos(7 * std::numbers::pi / 16));
}

TEST(Presets, DttEight) { EXPECT_EQ(valuesOf(Preset::Dtt, 8), (std::vector<double>{0.875, 0.625, 0.375, 0.125})); }

TEST(Presets, DttFour) { EXPECT_EQ(valuesOf(Preset::Dtt, 4), (std::vector<double>{0.75, 0.25})); }

TEST(Presets, IntegerSequences) {
  EXPECT_EQ(valuesOf(Preset::Triangular, 8), (std::vector<double>{10, 6, 3, 1}));
  EXPECT_EQ(valuesOf(Preset::Prime, 8), (std::vector<double>{7, 5, 3, 2}));
  EXPECT_EQ(valuesOf(Preset::Fibonacci, 8), (std::vector<double>{5, 3, 2, 1}));
  EXPECT_EQ(valuesOf(Preset::Fibonacci, 2), (std::vector<double>{1}));
  EXPECT_EQ(valuesOf(Preset::Prime, 12), (std::vector<double>{13, 11, 7, 5, 3, 2}));
}

TEST(Presets, NamesRoundTrip) {
  for (Preset p : {Preset::Dct, Preset::Dtt, Preset::Triangular, Preset::Prime, Preset::Fibonacci}) {
    EXPECT_EQ(parsePreset(presetName(p)), p);
  }
}

TEST(Presets, Errors) {
  try {
    parsePreset("hadamard");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownPreset);
  }
  for (std::size_t n : {0u, 1u, 7u}) {
    try {
      presetValues({Preset::Dct, n});
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OddSize);
    }
  }
}

TEST(PresetProperties, DttIsArithmeticInUnitInterval) {
  for (std::size_t n = 2; n <= 64; n += 2) {
    const auto v = valuesOf(Preset::Dtt, n);
    for (std::size_t k = 0; k < v.size(); ++k) {
      EXPECT_GT(v[k], 0.0);
      EXPECT_LT(v[k], 1.0);
      if (k > 0) EXPECT_NEAR(v[k - 1] - v[k], 2.0 / static_cast<double>(n), 1e-15);
    }
  }
}

TEST(PresetProperties, DctValuesAreChebyshevRoots) {
  for (std::size_t n = 2; n <= 64; n += 2) {
    for (double y : valuesOf(Preset::Dct, n)) {
      EXPECT_LE(std::abs(std::cos(static_cast<double>(n) * std::acos(y))), 1e-12) << "n=" << n;
    }
  }
}

TEST(PresetProperties, StrictlyDescendingPositiveDistinct) {
  for (Preset p : {Preset::Dct, Preset::Dtt, Preset::Triangular, Preset::Prime, Preset::Fibonacci}) {
    for (std::size_t n = 2; n <= 64; n += 2) {
      const auto v = valuesOf(p, n);
      ASSERT_EQ(v.size(), n / 2);
      for (std::size_t k = 0; k < v.size(); ++k) {
        EXPECT_GT(v[k], 0.0);
        if (k > 0) EXPECT_LT(v[k], v[k - 1]) << presetName(p) << " n=" << n;
      }
    }
  }
}
