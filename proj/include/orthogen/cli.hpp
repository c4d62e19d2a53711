#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "orthogen/linsolve.hpp"

namespace orthogen::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kNumericFailure = 3,
};

/// Outcome of checking a square matrix for orthonormal rows.
struct VerifyReport {
  double orthogonalityResidual = 0.0;  ///< max |(M·Mᵀ − I)_ij|
  std::size_t worstRow = 0;            ///< (worstRow, worstCol) attains the residual
  std::size_t worstCol = 0;
  double rowNormMaxDev = 0.0;          ///< max | ‖row_i‖ − 1 |
  bool parityOK = false;               ///< mirrored even/odd layout of generated matrices
  std::vector<std::string> conditionWarnings;
};

/// `scale` divides every entry first (for integer tables).
VerifyReport verifyMatrix(const DenseMatrix& m, double tolerance, double scale = 1.0);

/// Runs one command line (args[0] is the program name). Writes normal output
/// to `out` and diagnostics to `err`; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthogen::cli
