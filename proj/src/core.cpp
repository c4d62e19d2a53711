#include "orthogen/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "elimination.hpp"
#include "orthogen/error.hpp"

namespace orthogen {

namespace {

// Monomial evaluation of high-degree P̂ cancels heavily; binary64 alone loses
// orthogonality around 1e-7 for clustered values at m = 8.
#if defined(__SIZEOF_FLOAT128__)
using InductionReal = __float128;
#else
using InductionReal = long double;
#endif

// The binary64 singularity threshold scaled to the working precision: pivots of
// the moment systems shrink geometrically with degree even for well-separated
// values, so the absolute cut must track the precision actually used.
#if defined(__SIZEOF_FLOAT128__)
constexpr double kInductionEpsilon = 1.925929944387235853e-34;  // 2^-112
#else
constexpr double kInductionEpsilon = std::numeric_limits<long double>::epsilon();
#endif
constexpr double kInductionSingularRelTol =
    kSingularRelTol * (kInductionEpsilon / std::numeric_limits<double>::epsilon());

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// pw[k][e] = y_k^e for e < 2m, by repeated multiplication.
template <typename Real>
std::vector<std::vector<Real>> powerTable(std::span<const double> y) {
  const std::size_t m = y.size();
  std::vector<std::vector<Real>> pw(m, std::vector<Real>(2 * m + 1));
  for (std::size_t k = 0; k < m; ++k) {
    pw[k][0] = Real(1);
    for (std::size_t e = 1; e <= 2 * m; ++e) pw[k][e] = pw[k][e - 1] * Real(y[k]);
  }
  return pw;
}

// Rows i < t of the degree-(2t+off) system: a[i][p−1] = Σ_k evals[i][k]·y_k^{2(t−p)+off},
// negB[i] = −Σ_k evals[i][k]·y_k^{2t+off}. off = 0 for even, 1 for odd.
template <typename Real>
void assembleSystem(const std::vector<std::vector<Real>>& pw, const std::vector<std::vector<Real>>& evals,
                    std::size_t t, std::size_t off, std::vector<Real>& a, std::vector<Real>& negB) {
  const std::size_t m = pw.size();
  a.assign(t * t, Real(0));
  negB.assign(t, Real(0));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t p = 1; p <= t; ++p) {
      Real s(0);
      for (std::size_t k = 0; k < m; ++k) s += evals[i][k] * pw[k][2 * (t - p) + off];
      a[i * t + (p - 1)] = s;
    }
    Real s(0);
    for (std::size_t k = 0; k < m; ++k) s += evals[i][k] * pw[k][2 * t + off];
    negB[i] = -s;
  }
}

template <typename Real>
struct Induction {
  std::vector<std::vector<Real>> evenEval, oddEval, evenCoef, oddCoef;
};

// The coefficient induction on the given values, no rescaling.
template <typename Real>
Induction<Real> induct(std::span<const double> y) {
  const std::size_t m = y.size();
  const auto pw = powerTable<Real>(y);
  Induction<Real> r;
  r.evenEval.emplace_back(m, Real(1));
  r.oddEval.emplace_back(m);
  for (std::size_t k = 0; k < m; ++k) r.oddEval[0][k] = Real(y[k]);
  r.evenCoef.emplace_back();
  r.oddCoef.emplace_back();

  std::vector<Real> a, negB;
  for (std::size_t t = 1; t < m; ++t) {
    for (std::size_t off = 0; off < 2; ++off) {
      auto& evals = off == 0 ? r.evenEval : r.oddEval;
      auto& coefs = off == 0 ? r.evenCoef : r.oddCoef;
      assembleSystem(pw, evals, t, off, a, negB);
      std::vector<Real> d = detail::eliminate<Real>(a, negB, t, kInductionSingularRelTol);

      std::vector<Real> next(m);
      for (std::size_t k = 0; k < m; ++k) {
        Real v = pw[k][2 * t + off];
        for (std::size_t p = 1; p <= t; ++p) v += pw[k][2 * (t - p) + off] * d[p - 1];
        next[k] = v;
      }
      evals.push_back(std::move(next));
      coefs.push_back(std::move(d));
    }
  }
  return r;
}

template <typename Real>
Vector toDouble(const std::vector<Real>& v, double factor = 1.0) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<double>(v[i]) * factor;
  return out;
}

EquationSystem systemFromBasis(const ReducedBasis& basis, std::size_t t, std::size_t off) {
  const auto& evals = off == 0 ? basis.evenEval : basis.oddEval;
  if (t < 1 || t >= basis.m() || evals.size() < t) {
    throw Error(ErrorKind::InvalidArgument, "system degree index " + std::to_string(t) + " out of range");
  }
  std::vector<double> a, negB;
  assembleSystem(powerTable<double>(basis.values), evals, t, off, a, negB);
  return {DenseMatrix(t, t, std::move(a)), std::move(negB)};
}

// Runs the induction on vs/s. A singular step is reported together with the
// closest pair of values, the usual culprit.
Induction<InductionReal> inductScaled(const ValueSet& vs, double s) {
  std::vector<double> scaled(vs.values().begin(), vs.values().end());
  for (double& v : scaled) v /= s;
  try {
    return induct<InductionReal>(scaled);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularSystem || vs.size() < 2) throw;
    std::vector<double> sorted(vs.values().begin(), vs.values().end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t best = 1;
    for (std::size_t k = 2; k < sorted.size(); ++k) {
      if ((sorted[k] - sorted[k - 1]) / sorted[k] < (sorted[best] - sorted[best - 1]) / sorted[best]) best = k;
    }
    throw Error(ErrorKind::SingularSystem, std::string(e.what()) + "; closest values are " +
                                               shortest(sorted[best - 1]) + " and " + shortest(sorted[best]));
  }
}

}  // namespace

ValueSet::ValueSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::DegenerateValues, "value set is empty");
  std::set<double> seen;
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorKind::DegenerateValues, "non-finite value " + shortest(v));
    if (v <= 0.0) throw Error(ErrorKind::DegenerateValues, "non-positive value " + shortest(v));
    if (!seen.insert(v).second) throw Error(ErrorKind::DegenerateValues, "duplicate value " + shortest(v));
  }
}

double ValueSet::maxValue() const { return *std::max_element(values_.begin(), values_.end()); }

std::vector<double> ReducedBasis::polynomial(std::size_t degree) const {
  const std::size_t t = degree / 2;
  if (t >= m()) throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(degree) + " out of range");
  const Vector& c = (degree % 2 == 0) ? evenCoef[t] : oddCoef[t];
  std::vector<double> out(degree + 1, 0.0);
  out[0] = 1.0;
  for (std::size_t p = 1; p <= t; ++p) out[2 * p] = c[p - 1];
  return out;
}

EquationSystem buildEvenSystem(const ReducedBasis& basis, std::size_t t) { return systemFromBasis(basis, t, 0); }

EquationSystem buildOddSystem(const ReducedBasis& basis, std::size_t t) { return systemFromBasis(basis, t, 1); }

ReducedBasis inductBasis(const ValueSet& vs) {
  const double s = vs.maxValue();
  const auto r = inductScaled(vs, s);

  // P̂(x) = s^deg · P̂'(x/s): evaluations pick up s^deg, coefficient p picks up s^{2p}.
  ReducedBasis b;
  b.values.assign(vs.values().begin(), vs.values().end());
  for (std::size_t t = 0; t < vs.size(); ++t) {
    b.evenEval.push_back(toDouble(r.evenEval[t], std::pow(s, 2.0 * t)));
    b.oddEval.push_back(toDouble(r.oddEval[t], std::pow(s, 2.0 * t + 1)));
    b.evenCoef.push_back(toDouble(r.evenCoef[t]));
    b.oddCoef.push_back(toDouble(r.oddCoef[t]));
    for (std::size_t p = 1; p <= t; ++p) {
      b.evenCoef[t][p - 1] *= std::pow(s, 2.0 * p);
      b.oddCoef[t][p - 1] *= std::pow(s, 2.0 * p);
    }
  }
  return b;
}

NormalizedRow normalizeRow(std::span<const double> evals) {
  // Scale by the largest magnitude first so the sum of squares cannot overflow.
  const double big = maxAbs(evals);
  if (big == 0.0) throw Error(ErrorKind::ZeroRow, "cannot normalize an all-zero row");
  double ss = 0.0;
  for (double v : evals) ss += (v / big) * (v / big);
  NormalizedRow r{1.0 / (big * std::sqrt(2.0 * ss)), Vector(evals.size())};
  for (std::size_t k = 0; k < evals.size(); ++k) r.unitHalfRow[k] = (evals[k] / big) / std::sqrt(2.0 * ss);
  return r;
}

std::vector<std::string> conditionWarnings(const ValueSet& vs, const GenerateOptions& opts) {
  std::vector<std::string> out;
  if (vs.size() > opts.softMaxM) {
    out.push_back("m = " + std::to_string(vs.size()) + " exceeds the soft cap of " + std::to_string(opts.softMaxM) +
                  "; coefficient systems may be ill-conditioned in double precision");
  }
  std::vector<double> sorted(vs.values().begin(), vs.values().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if ((sorted[k] - sorted[k - 1]) / sorted[k] < opts.nearDuplicateRelGap) {
      out.push_back("values " + shortest(sorted[k - 1]) + " and " + shortest(sorted[k]) +
                    " are nearly equal; coefficient systems may be nearly singular");
    }
  }
  return out;
}

OrthoMatrix assembleMatrix(const ValueSet& vs, const GenerateOptions& opts) {
  const std::size_t m = vs.size();
  const std::size_t n = 2 * m;
  const double s = vs.maxValue();
  const auto r = inductScaled(vs, s);

  OrthoMatrix out{DenseMatrix(n, n), std::vector<double>(vs.values().begin(), vs.values().end()),
                  std::vector<double>(n), conditionWarnings(vs, opts)};
  for (std::size_t t = 0; t < m; ++t) {
    const auto even = normalizeRow(toDouble(r.evenEval[t]));
    const auto odd = normalizeRow(toDouble(r.oddEval[t]));
    for (std::size_t k = 0; k < m; ++k) {
      out.entries(2 * t, k) = even.unitHalfRow[k];
      out.entries(2 * t, mirrorColumn(m, k)) = even.unitHalfRow[k];
      out.entries(2 * t + 1, k) = -odd.unitHalfRow[k];
      out.entries(2 * t + 1, mirrorColumn(m, k)) = odd.unitHalfRow[k];
    }
    // The induction ran on y/s; undo the s^deg factor for reporting.
    out.normScales[2 * t] = even.scale / std::pow(s, 2.0 * t);
    out.normScales[2 * t + 1] = odd.scale / std::pow(s, 2.0 * t + 1);
  }

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += out.entries(i, k) * out.entries(j, k);
      residual = std::max(residual, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  if (residual > opts.orthogonalityWarnTol) {
    out.warnings.push_back("orthogonality residual " + shortest(residual) + " exceeds " +
                           shortest(opts.orthogonalityWarnTol) + "; the values are too ill-conditioned for this size");
  }
  return out;
}

}  // namespace orthogen
