#include "cubetess/error.hpp"

namespace cubetess {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "INVALID_INPUT";
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case Errc::DomainError: return "DOMAIN_ERROR";
    case Errc::NonGenericLine: return "NON_GENERIC_LINE";
    case Errc::NoEpsilonFound: return "NO_EPSILON_FOUND";
    case Errc::PreconditionFailed: return "PRECONDITION_FAILED";
    case Errc::TheoremViolation: return "THEOREM_VIOLATION";
    case Errc::Syntax: return "SYNTAX";
    case Errc::BadRational: return "BAD_RATIONAL";
    case Errc::BadHeader: return "BAD_HEADER";
    case Errc::UnsupportedDimension: return "UNSUPPORTED_DIMENSION";
  }
  return "UNKNOWN";
}

}  // namespace cubetess
