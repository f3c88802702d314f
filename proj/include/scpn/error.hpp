#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scpn {

enum class ErrorCode {
  kTableMismatch,
  kUnknownGenerator,
  kOrderUnderflow,
  kBasePointMismatch,
  kSingularBody,
  kInvalidSubstitution,
  kParity,
  kShapeMismatch,
  kDimensionTooLarge,
  kNonHolomorphic,
  kDegenerateSeed,
  kNotClosed,
  kOffCircle,
  kNonInvertibleAnsatz,
  kNonProjector,
  kUnsupportedReduction,
  kParse,
  kUnknownExample,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` lets the
// verifier classify a failure without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scpn
