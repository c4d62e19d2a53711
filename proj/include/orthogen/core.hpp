#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orthogen/linsolve.hpp"

namespace orthogen {

/// The m distinct positive generating values y_0 … y_{m−1}. Order is
/// preserved: it fixes the column order of the generated matrix.
class ValueSet {
 public:
  /// Throws Error{DegenerateValues} naming the first offending value when
  /// the input is empty, contains a non-positive or non-finite value, or
  /// repeats a value (exact comparison).
  explicit ValueSet(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  double maxValue() const;

 private:
  std::vector<double> values_;
};

/// Monic ("reduced") even/odd polynomials evaluated at the generating values.
///
/// evenEval[t][k] = P̂_{2t}(y_k) and oddEval[t][k] = P̂_{2t+1}(y_k).
/// evenCoef[t] holds the t non-leading coefficients of
///   P̂_{2t}(x)   = x^{2t}   + Σ_{p=1..t} evenCoef[t][p−1] · x^{2(t−p)}
/// and oddCoef[t] those of
///   P̂_{2t+1}(x) = x^{2t+1} + Σ_{p=1..t} oddCoef[t][p−1] · x^{2(t−p)+1}.
/// evenCoef[0] and oddCoef[0] are empty (P̂_0 = 1, P̂_1 = x).
struct ReducedBasis {
  std::vector<double> values;
  std::vector<Vector> evenEval;
  std::vector<Vector> oddEval;
  std::vector<Vector> evenCoef;
  std::vector<Vector> oddCoef;

  std::size_t m() const noexcept { return values.size(); }

  /// Full coefficient list of P̂_degree, highest power first, including the
  /// zero coefficients of the opposite parity (length degree+1).
  std::vector<double> polynomial(std::size_t degree) const;
};

/// One induction step's dense system a·D = negB.
struct EquationSystem {
  DenseMatrix a;
  Vector negB;
};

/// Even-degree system for P̂_{2t}, 1 ≤ t ≤ m−1. Requires evenEval[0..t−1].
EquationSystem buildEvenSystem(const ReducedBasis& basis, std::size_t t);

/// Odd-degree system for P̂_{2t+1}, 1 ≤ t ≤ m−1. Requires oddEval[0..t−1].
EquationSystem buildOddSystem(const ReducedBasis& basis, std::size_t t);

/// Runs the full even/odd coefficient induction. Values are rescaled into
/// (0, 1] for the solves and the results mapped back, so coefficients and
/// evaluations are reported in the caller's scale.
ReducedBasis inductBasis(const ValueSet& vs);

struct NormalizedRow {
  double scale;          ///< c = (2 Σ evals²)^{−1/2}, always positive
  Vector unitHalfRow;    ///< c · evals
};

/// Throws Error{ZeroRow} if every evaluation is zero.
NormalizedRow normalizeRow(std::span<const double> evals);

/// The generated 2m×2m orthogonal matrix.
///
/// Columns run in ascending x: column k (k < m) samples −y_k and column
/// 2m−1−k samples +y_k. Row 2t is c·P̂_{2t} in both halves; row 2t+1 is
/// −ĉ·P̂_{2t+1} on the left and +ĉ·P̂_{2t+1} on the right.
struct OrthoMatrix {
  DenseMatrix entries;
  std::vector<double> values;       ///< generating values, as given
  std::vector<double> normScales;   ///< c_{(i,0)} per row, caller's scale
  std::vector<std::string> warnings;

  std::size_t n() const noexcept { return entries.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

struct GenerateOptions {
  std::size_t softMaxM = 16;        ///< beyond this, warn about conditioning
  double nearDuplicateRelGap = 1e-6;
  double orthogonalityWarnTol = 1e-9;  ///< warn when ‖M·Mᵀ − I‖ exceeds this
};

OrthoMatrix assembleMatrix(const ValueSet& vs, const GenerateOptions& opts = {});

/// Conditioning warnings for `vs` (near-duplicates, size above the cap).
std::vector<std::string> conditionWarnings(const ValueSet& vs, const GenerateOptions& opts = {});

/// Column index holding +y_k in a 2m×2m matrix.
constexpr std::size_t mirrorColumn(std::size_t m, std::size_t k) noexcept { return 2 * m - 1 - k; }

}  // namespace orthogen
