#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubetess {

enum class Errc {
  InvalidInput,
  DimensionMismatch,
  IndexOutOfRange,
  DomainError,
  NonGenericLine,
  NoEpsilonFound,
  PreconditionFailed,
  TheoremViolation,
  Syntax,
  BadRational,
  BadHeader,
  UnsupportedDimension,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying one of the library's error kinds. Validation problems
/// (bounds, overlap, volume) are reported in ValidationReport, not thrown.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cubetess
