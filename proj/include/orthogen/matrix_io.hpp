#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orthogen/core.hpp"
#include "orthogen/linsolve.hpp"
#include "orthogen/quantize.hpp"

namespace orthogen {

/// Fixed-point text with `decimals` digits, locale independent. Values
/// that round to zero print without a sign.
std::string formatFixed(double v, int decimals = 7);

/// Shortest decimal string that round-trips to the same binary64.
std::string formatShortest(double v);

// Writers. Every row ends with '\n'.
std::string toCsv(const DenseMatrix& m);
std::string toCsv(const IntMatrix& m);
std::string toPretty(const DenseMatrix& m);
std::string toPretty(const IntMatrix& m);

/// {"n", "values", "entries", "normScales"} plus "warnings" and, when a
/// basis is supplied, the monic "polynomials" (highest power first).
std::string toJson(const OrthoMatrix& m, const ReducedBasis* basis = nullptr);
std::string toJson(const IntMatrix& m);
std::string toJson(const DenseMatrix& m);

/// `#define <macroName>` table followed by `static const int g_mat[N][N]`.
std::string toCHeader(const IntMatrix& m, std::string_view macroName);

/// A rectangular grid of numbers from CSV (comma or whitespace separated,
/// '#' comments and blank lines skipped) or JSON (array of rows, or an
/// object with an "entries" array). Throws Error{Parse}.
DenseMatrix parseGrid(std::string_view text);

/// parseGrid plus a squareness check.
DenseMatrix parseMatrix(std::string_view text);

/// Grayscale PGM, plain (P2) or raw (P5, 8- or 16-bit big-endian).
struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  int maxval = 255;
  std::vector<int> pixels;  ///< row-major
};

PgmImage parsePgm(std::string_view bytes);
std::string writePgm(const PgmImage& img, bool binary = false);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view contents);

}  // namespace orthogen
