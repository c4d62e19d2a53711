#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "orthogen/core.hpp"
#include "orthogen/linsolve.hpp"
#include "orthogen/matrix_io.hpp"

namespace orthogen::test_support {

inline std::string dataPath(const std::string& name) { return std::string(ORTHOGEN_TEST_DATA_DIR) + "/" + name; }

inline DenseMatrix loadGolden(const std::string& name) { return parseMatrix(readFile(dataPath(name))); }

inline double maxAbsDiff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

/// max |(M·Mᵀ − I)_ij|
inline double gramResidual(const DenseMatrix& m) {
  const DenseMatrix g = multiply(m, transpose(m));
  double worst = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

/// m values in (0, 1] with pairwise gap ≥ minGap, in random order.
inline ValueSet randomValueSet(std::mt19937_64& rng, std::size_t m, double minGap = 1e-3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v;
  while (v.size() < m) {
    const double c = 1.0 - u(rng);  // (0, 1]
    const bool ok = std::all_of(v.begin(), v.end(), [&](double w) { return std::abs(w - c) >= minGap; });
    if (ok) v.push_back(c);
  }
  return ValueSet(std::move(v));
}

}  // namespace orthogen::test_support
