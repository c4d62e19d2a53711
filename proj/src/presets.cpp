#include "orthogen/presets.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "orthogen/error.hpp"

namespace orthogen {

namespace {

constexpr std::array<std::pair<std::string_view, Preset>, 5> kNames{{
    {"dct", Preset::Dct},
    {"dtt", Preset::Dtt},
    {"triangular", Preset::Triangular},
    {"prime", Preset::Prime},
    {"fibonacci", Preset::Fibonacci},
}};

std::vector<double> firstPrimes(std::size_t count) {
  std::vector<double> out;
  for (long c = 2; out.size() < count; ++c) {
    bool prime = true;
    for (long d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(static_cast<double>(c));
  }
  return out;
}

}  // namespace

Preset parsePreset(std::string_view name) {
  for (const auto& [key, p] : kNames) {
    if (key == name) return p;
  }
  throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) +
                                            "' (expected dct, dtt, triangular, prime or fibonacci)");
}

std::string_view presetName(Preset p) noexcept {
  for (const auto& [key, q] : kNames) {
    if (q == p) return key;
  }
  return "?";
}

ValueSet presetValues(const PresetSpec& spec) {
  if (spec.n < 2 || spec.n % 2 != 0) {
    throw Error(ErrorKind::OddSize, "matrix size must be an even number >= 2, got " + std::to_string(spec.n));
  }
  const std::size_t m = spec.n / 2;
  const double n = static_cast<double>(spec.n);
  std::vector<double> v;
  v.reserve(m);

  switch (spec.name) {
    case Preset::Dct:
      // Positive Chebyshev roots cos((2k+1)π/2n); already descending in k.
      for (std::size_t k = 0; k < m; ++k) v.push_back(std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n)));
      break;
    case Preset::Dtt:
      for (std::size_t k = m; k-- > 0;) v.push_back((2.0 * k + 1.0) / n);
      break;
    case Preset::Triangular:
      for (std::size_t k = m; k >= 1; --k) v.push_back(static_cast<double>(k * (k + 1) / 2));
      break;
    case Preset::Prime: {
      auto p = firstPrimes(m);
      v.assign(p.rbegin(), p.rend());
      break;
    }
    case Preset::Fibonacci: {
      // Distinct values 1, 2, 3, 5, 8, …
      std::vector<double> f{1.0, 2.0};
      while (f.size() < m) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
      f.resize(m);
      v.assign(f.rbegin(), f.rend());
      break;
    }
  }
  return ValueSet(std::move(v));
}

}  // namespace orthogen
