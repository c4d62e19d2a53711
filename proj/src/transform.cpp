#include "orthogen/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orthogen/error.hpp"

namespace orthogen {

namespace {

// One block: forward Y = M X Mᵀ, inverse X = Mᵀ Y M. `tmp` holds n*n scratch.
void transformBlock(const double* mat, std::size_t n, const double* x, double* y, double* tmp, Direction dir) {
  if (dir == Direction::Forward) {
    // tmp = M X
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += mat[i * n + k] * x[k * n + j];
        tmp[i * n + j] = s;
      }
    }
    // y = tmp Mᵀ
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += tmp[i * n + k] * mat[j * n + k];
        y[i * n + j] = s;
      }
    }
  } else {
    // tmp = Mᵀ Y
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += mat[k * n + i] * x[k * n + j];
        tmp[i * n + j] = s;
      }
    }
    // y = tmp M
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += tmp[i * n + k] * mat[k * n + j];
        y[i * n + j] = s;
      }
    }
  }
}

std::size_t checkBatch(const DenseMatrix& m, std::span<const double> in, std::span<double> out) {
  if (!m.square()) throw Error(ErrorKind::SizeMismatch, "transform matrix is not square");
  const std::size_t nn = m.rows() * m.cols();
  if (in.size() % nn != 0) {
    throw Error(ErrorKind::SizeMismatch, "input length " + std::to_string(in.size()) +
                                             " is not a multiple of the block size " + std::to_string(nn));
  }
  if (out.size() != in.size()) throw Error(ErrorKind::SizeMismatch, "output length differs from input length");
  return in.size() / nn;
}

Block apply(const OrthoMatrix& m, const Block& b, Direction dir) {
  const Domain want = dir == Direction::Forward ? Domain::Spatial : Domain::Frequency;
  if (b.n != m.n()) {
    throw Error(ErrorKind::SizeMismatch,
                "block is " + std::to_string(b.n) + "x" + std::to_string(b.n) + " but matrix is " +
                    std::to_string(m.n()) + "x" + std::to_string(m.n()));
  }
  if (b.domain != want) {
    throw Error(ErrorKind::InvalidArgument, dir == Direction::Forward ? "forward2D expects a spatial block"
                                                                      : "inverse2D expects a frequency block");
  }
  Block out;
  out.n = b.n;
  out.samples.resize(b.samples.size());
  out.domain = dir == Direction::Forward ? Domain::Frequency : Domain::Spatial;
  std::vector<double> tmp(b.samples.size());
  transformBlock(m.entries.data().data(), b.n, b.samples.data(), out.samples.data(), tmp.data(), dir);
  return out;
}

}  // namespace

Block::Block(std::size_t n_, std::vector<double> s, Domain d) : n(n_), samples(std::move(s)), domain(d) {
  if (n == 0 || samples.size() != n * n) {
    throw Error(ErrorKind::SizeMismatch, "block of size " + std::to_string(n) + " needs " + std::to_string(n * n) +
                                             " samples, got " + std::to_string(samples.size()));
  }
  for (double v : samples) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "block sample is not finite");
  }
}

Block forward2D(const OrthoMatrix& m, const Block& spatial) { return apply(m, spatial, Direction::Forward); }

Block inverse2D(const OrthoMatrix& m, const Block& frequency) { return apply(m, frequency, Direction::Inverse); }

CompactionReport compactionReport(const OrthoMatrix& m, const Block& spatial, std::size_t keep) {
  const std::size_t total = spatial.n * spatial.n;
  if (keep < 1 || keep > total) {
    throw Error(ErrorKind::InvalidArgument, "keep must be in [1, " + std::to_string(total) + "], got " +
                                                std::to_string(keep));
  }
  Block coef = forward2D(m, spatial);

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(coef.samples[a]) > std::abs(coef.samples[b]);
  });

  double all = 0.0;
  for (double v : coef.samples) all += v * v;
  double kept = 0.0;
  std::vector<bool> retain(total, false);
  for (std::size_t i = 0; i < keep; ++i) {
    retain[order[i]] = true;
    kept += coef.samples[order[i]] * coef.samples[order[i]];
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (!retain[i]) coef.samples[i] = 0.0;
  }

  const Block recon = inverse2D(m, coef);
  double se = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double d = recon.samples[i] - spatial.samples[i];
    se += d * d;
  }
  const double fraction = all > 0.0 ? std::min(1.0, kept / all) : 1.0;
  return {fraction, se / static_cast<double>(total)};
}

void transformBatch(const DenseMatrix& m, std::span<const double> in, std::span<double> out, Direction dir) {
  const std::size_t count = checkBatch(m, in, out);
  const std::size_t n = m.rows();
  const std::size_t nn = n * n;
  const double* mat = m.data().data();
  const long blocks = static_cast<long>(count);

#pragma omp parallel
  {
    std::vector<double> tmp(nn);
#pragma omp for schedule(static)
    for (long b = 0; b < blocks; ++b) {
      const std::size_t off = static_cast<std::size_t>(b) * nn;
      transformBlock(mat, n, in.data() + off, out.data() + off, tmp.data(), dir);
    }
  }
}

void transformBatchSerial(const DenseMatrix& m, std::span<const double> in, std::span<double> out, Direction dir) {
  const std::size_t count = checkBatch(m, in, out);
  const std::size_t n = m.rows();
  const std::size_t nn = n * n;
  std::vector<double> tmp(nn);
  for (std::size_t b = 0; b < count; ++b) {
    transformBlock(m.data().data(), n, in.data() + b * nn, out.data() + b * nn, tmp.data(), dir);
  }
}

}  // namespace orthogen
