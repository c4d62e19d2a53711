#pragma once

// Gaussian elimination with partial pivoting, generic over the scalar type so
// the coefficient induction can run in extended precision.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orthogen/error.hpp"

namespace orthogen::detail {

template <typename Real>
Real absValue(Real v) {
  return v < Real(0) ? -v : v;
}

/// Solves the n×n system stored row-major in `a` for right-hand side `rhs`.
/// Both are consumed. Throws Error{SingularSystem} when a pivot falls below
/// relTol · max|a|.
template <typename Real>
std::vector<Real> eliminate(std::vector<Real> a, std::vector<Real> rhs, std::size_t n, double relTol) {
  Real scale(0);
  for (const Real& v : a) scale = std::max(scale, absValue(v));
  const Real tiny = Real(relTol) * scale;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (absValue(a[i * n + k]) > absValue(a[piv * n + k])) piv = i;
    }
    if (scale == Real(0) || absValue(a[piv * n + k]) < tiny) {
      throw Error(ErrorKind::SingularSystem, "singular " + std::to_string(n) + "x" + std::to_string(n) +
                                                 " system (pivot " + std::to_string(k) +
                                                 " below the relative singularity threshold)");
    }
    if (piv != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n, a.begin() + piv * n);
      std::swap(rhs[k], rhs[piv]);
    }
    const Real p = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Real f = a[i * n + k] / p;
      if (f == Real(0)) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      rhs[i] -= f * rhs[k];
    }
  }

  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i * n + j] * x[j];
    x[i] = s / a[i * n + i];
  }
  return x;
}

}  // namespace orthogen::detail
