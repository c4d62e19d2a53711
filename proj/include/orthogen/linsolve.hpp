#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace orthogen {

using Vector = std::vector<double>;

/// Row-major dense matrix with finite entries. Sized for the small t×t
/// coefficient systems (t < m ≤ a few dozen), not for general use.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  static DenseMatrix identity(std::size_t n);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Pivots smaller than this fraction of the largest input magnitude are
/// treated as zero.
inline constexpr double kSingularRelTol = 1e-12;

/// Solves a·x = rhs by Gaussian elimination with partial pivoting.
/// Throws Error{SingularSystem} when a pivot falls below kSingularRelTol
/// relative to max|a|.
Vector solve(const DenseMatrix& a, std::span<const double> rhs);

/// det(a) as the signed product of the partial-pivoting pivots. Singular
/// input yields 0 (or a value at rounding level), never an exception.
double determinant(const DenseMatrix& a);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
Vector multiply(const DenseMatrix& a, std::span<const double> x);
DenseMatrix transpose(const DenseMatrix& a);

double maxAbs(std::span<const double> v);

}  // namespace orthogen
