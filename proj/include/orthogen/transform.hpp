#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orthogen/core.hpp"
#include "orthogen/linsolve.hpp"

namespace orthogen {

enum class Domain { Spatial, Frequency };
enum class Direction { Forward, Inverse };

/// n×n samples (row-major) tagged with the domain they live in.
struct Block {
  std::size_t n = 0;
  std::vector<double> samples;
  Domain domain = Domain::Spatial;

  Block() = default;
  /// Throws Error{SizeMismatch} if samples.size() != n*n, or
  /// Error{InvalidArgument} on a non-finite sample.
  Block(std::size_t n, std::vector<double> samples, Domain domain = Domain::Spatial);

  double operator()(std::size_t r, std::size_t c) const { return samples[r * n + c]; }
};

/// Y = M·X·Mᵀ
Block forward2D(const OrthoMatrix& m, const Block& spatial);
/// X = Mᵀ·Y·M
Block inverse2D(const OrthoMatrix& m, const Block& frequency);

struct CompactionReport {
  double retainedEnergyFraction;
  double reconstructionMSE;
};

/// Keeps the `keep` largest-magnitude coefficients (ties by raster order),
/// zeroes the rest and reconstructs. An all-zero block reports fraction 1.
CompactionReport compactionReport(const OrthoMatrix& m, const Block& spatial, std::size_t keep);

// Batched kernels. `in` and `out` hold `count` consecutive n×n blocks
// (row-major each); the matrix is n×n. `in` and `out` must not alias.

/// OpenMP-parallel over blocks.
void transformBatch(const DenseMatrix& m, std::span<const double> in, std::span<double> out, Direction dir);
/// Single-threaded reference with the same arithmetic order per block.
void transformBatchSerial(const DenseMatrix& m, std::span<const double> in, std::span<double> out, Direction dir);

}  // namespace orthogen
