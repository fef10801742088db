#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dillab {

enum class Errc {
  InvalidArgument,
  NotIrreducible,
  NoDiagonalEntry,
  VertexOutOfRange,
  DegreePreconditionViolated,
  NoSignChange,
  DomainError,
  ValidationFailed,
  AlphaOutOfRange,
  RangeError,
  GenusMismatch,
  NotPairwiseOrthogonal,
  FixedPointOnCircle,
  IncrementTooLarge,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dillab
