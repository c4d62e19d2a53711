#pragma once

#include <stdexcept>
#include <string>

namespace orthogen {

enum class ErrorKind {
  SingularSystem,
  DegenerateValues,
  ZeroRow,
  UnknownPreset,
  OddSize,
  SizeMismatch,
  Parse,
  InvalidArgument,
};

/// Single exception type for the library; `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orthogen
