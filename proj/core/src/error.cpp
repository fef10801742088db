#include "dillab/error.hpp"

namespace dillab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NoDiagonalEntry: return "NoDiagonalEntry";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DegreePreconditionViolated: return "DegreePreconditionViolated";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::DomainError: return "DomainError";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::RangeError: return "RangeError";
    case Errc::GenusMismatch: return "GenusMismatch";
    case Errc::NotPairwiseOrthogonal: return "NotPairwiseOrthogonal";
    case Errc::FixedPointOnCircle: return "FixedPointOnCircle";
    case Errc::IncrementTooLarge: return "IncrementTooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dillab
