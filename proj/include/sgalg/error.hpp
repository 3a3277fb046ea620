#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgalg {

enum class ErrorCode {
  NotPointed,         // some nonzero nonnegative combination of generators is 0
  InvalidPartition,   // a generator lies outside pos(E)
  NotNumerical,       // input is not a numerical semigroup
  NotSimplicial,      // |E| differs from rank(ZA)
  NotCohenMacaulay,
  NotStandardGraded,  // no positive functional takes the same value on all generators
  PartitionNotConic,  // standard-monomial set is infinite or exceeds the cap
  CapExceeded,        // a degree-bounded enumeration is too large to hold
  NotSublattice,
  TooManyVertices,
  VerificationFailed,
  ParseError,
  Overflow,           // exponent or degree arithmetic left the 64-bit range
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgalg
