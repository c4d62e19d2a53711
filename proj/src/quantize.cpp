#include "orthogen/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "orthogen/error.hpp"

namespace orthogen {

IntMatrix quantizeMatrix(const DenseMatrix& source, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  if (!source.square()) throw Error(ErrorKind::SizeMismatch, "quantize: matrix is not square");
  IntMatrix out;
  out.n = source.rows();
  out.scale = scale;
  out.source = source;
  out.entries.reserve(source.data().size());
  // std::llround rounds half away from zero.
  for (double v : source.data()) out.entries.push_back(std::llround(scale * v));
  return out;
}

IntMatrix quantizeMatrix(const OrthoMatrix& m, double scale) { return quantizeMatrix(m.entries, scale); }

IntMatrix quantizeMatrix(const OrthoMatrix& m) { return quantizeMatrix(m.entries, autoScale(m.n())); }

double dequantizeError(const IntMatrix& im) {
  double worst = 0.0;
  const auto src = im.source.data();
  for (std::size_t i = 0; i < im.entries.size(); ++i) {
    worst = std::max(worst, std::abs(static_cast<double>(im.entries[i]) / im.scale - src[i]));
  }
  return worst;
}

double orthogonalityResidual(const IntMatrix& im) {
  const std::size_t n = im.n;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<double>(im(i, k)) * static_cast<double>(im(j, k));
      s /= im.scale * im.scale;
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace orthogen
