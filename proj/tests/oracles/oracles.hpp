#pragma once

// Reference constructions used only by the test suite. Nothing here calls
// into the coefficient induction; they check it from independent routes.

#include <cstddef>
#include <optional>

#include "orthogen/core.hpp"
#include "orthogen/linsolve.hpp"

namespace orthogen::oracles {

/// Orthonormal rows spanning increasing-degree polynomial evaluations over
/// the mirrored points x = (−y_0, …, −y_{m−1}, +y_{m−1}, …, +y_0), built by
/// modified Gram–Schmidt with one reorthogonalization pass over [x_j^i].
struct OracleBasis {
  DenseMatrix rows;
};

/// Throws Error{DegenerateValues} when a residual norm collapses below
/// 1e-12 of its pre-projection norm.
OracleBasis gramSchmidtOracle(const ValueSet& vs);

/// Closed-form coefficients for m ≤ 2: the 1×1 systems give
/// d(2,2) = −Σy²/m and d(3,3) = −Σy⁴/Σy². Empty for m = 1.
struct SmallCaseCoefficients {
  std::optional<long double> evenD22;
  std::optional<long double> oddD33;
};

/// Throws Error{InvalidArgument} for m > 2.
SmallCaseCoefficients symbolicSmallCase(const ValueSet& vs);

/// Laplace expansion along the first row, O(n!). For n ≤ 8.
double cofactorDeterminant(const DenseMatrix& a);

}  // namespace orthogen::oracles
