#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orthogen/core.hpp"

namespace orthogen {

enum class Preset { Dct, Dtt, Triangular, Prime, Fibonacci };

struct PresetSpec {
  Preset name;
  std::size_t n;  ///< matrix size; even, >= 2
};

/// Parses a CLI preset name ("dct", "dtt", "triangular", "prime",
/// "fibonacci"). Throws Error{UnknownPreset}.
Preset parsePreset(std::string_view name);
std::string_view presetName(Preset p) noexcept;

/// n/2 generating values for the preset, strictly descending.
/// Throws Error{OddSize} for odd or zero n.
ValueSet presetValues(const PresetSpec& spec);

}  // namespace orthogen
