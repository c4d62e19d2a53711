#include "orthogen/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "elimination.hpp"
#include "orthogen/error.hpp"

namespace orthogen {

namespace {

void checkFinite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "matrix entry is not finite");
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be >= 1");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be >= 1");
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                             std::to_string(data_.size()));
  }
  checkFinite(data_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be >= 1");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::SizeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  checkFinite(data_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double maxAbs(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

Vector solve(const DenseMatrix& a, std::span<const double> rhs) {
  if (!a.square()) throw Error(ErrorKind::SizeMismatch, "solve: matrix is not square");
  if (rhs.size() != a.rows()) throw Error(ErrorKind::SizeMismatch, "solve: right-hand side length mismatch");
  return detail::eliminate<double>({a.data().begin(), a.data().end()}, {rhs.begin(), rhs.end()}, a.rows(),
                                   kSingularRelTol);
}

double determinant(const DenseMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::SizeMismatch, "determinant: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<double> m(a.data().begin(), a.data().end());
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
    }
    if (m[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap_ranges(m.begin() + k * n, m.begin() + (k + 1) * n, m.begin() + piv * n);
      det = -det;
    }
    const double p = m[k * n + k];
    det *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / p;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return det;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::SizeMismatch, "multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vector multiply(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::SizeMismatch, "multiply: vector length mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace orthogen
