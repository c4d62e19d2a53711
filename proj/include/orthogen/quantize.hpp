#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "orthogen/core.hpp"
#include "orthogen/linsolve.hpp"

namespace orthogen {

/// Integer-scaled copy of a real matrix, as stored in codec transform tables.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> entries;  ///< row-major n×n
  double scale = 1.0;
  DenseMatrix source{1, 1};           ///< the real matrix that was rounded

  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// 64·√n, the convention behind the 8×8 (64√8) and 4×4 (128) codec tables.
inline double autoScale(std::size_t n) { return 64.0 * std::sqrt(static_cast<double>(n)); }

/// round(scale · source), nearest with ties away from zero.
/// Throws Error{InvalidArgument} for non-positive scale or a non-square source.
IntMatrix quantizeMatrix(const DenseMatrix& source, double scale);
IntMatrix quantizeMatrix(const OrthoMatrix& m, double scale);
IntMatrix quantizeMatrix(const OrthoMatrix& m);  ///< auto scale

/// max |entry/scale − source| over all cells.
double dequantizeError(const IntMatrix& im);

/// ‖(Q/s)(Q/s)ᵀ − I‖∞ (max-abs entry) for the rescaled integer matrix.
double orthogonalityResidual(const IntMatrix& im);

}  // namespace orthogen
