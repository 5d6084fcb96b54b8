#pragma once

#include <stdexcept>
#include <string>

namespace splitalg {

// Every failure the library can signal deliberately.  Codes split into three
// CLI exit classes: malformed input (1), violated mathematical precondition
// (2), and internal inconsistency that must never be silently absorbed (3).
enum class Err {
  MalformedSpec,
  NonPrimeModulus,
  ReducibleModulus,
  ElementRingMismatch,
  UndecidableForRing,
  InfiniteRing,
  IndexOutOfRange,
  NotAField,
  NotFiniteField,
  NotAUnit,
  AlgebraMismatch,
  NonMonicInput,
  NotACompleteFactorization,
  RingMismatch,
  DegreeMismatch,
  NotAHomomorphism,
  UnsupportedBaseRing,
  SearchSpaceTooLarge,
  NotSymmetric,
  EmptyBlock,
  NotCoprime,
  ProductMismatch,
  NotSeparable,
  NotDivisible,
  NonInvertibleResult,
  InternalInvariantViolation,
};

const char* err_name(Err e);

// CLI exit code class for an error (1, 2 or 3).
int err_exit_code(Err e);

class SplitError : public std::runtime_error {
public:
  SplitError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

// Internal consistency assertion: failures are bugs, not user errors.
inline void check_internal(bool ok, const char* what) {
  if (!ok) fail(Err::InternalInvariantViolation, what);
}

}  // namespace splitalg
