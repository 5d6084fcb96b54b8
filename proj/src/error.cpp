#include "splitalg/error.hpp"

namespace splitalg {

const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedSpec: return "MalformedSpec";
    case Err::NonPrimeModulus: return "NonPrimeModulus";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::ElementRingMismatch: return "ElementRingMismatch";
    case Err::UndecidableForRing: return "UndecidableForRing";
    case Err::InfiniteRing: return "InfiniteRing";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::NotAField: return "NotAField";
    case Err::NotFiniteField: return "NotFiniteField";
    case Err::NotAUnit: return "NotAUnit";
    case Err::AlgebraMismatch: return "AlgebraMismatch";
    case Err::NonMonicInput: return "NonMonicInput";
    case Err::NotACompleteFactorization: return "NotACompleteFactorization";
    case Err::RingMismatch: return "RingMismatch";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::NotAHomomorphism: return "NotAHomomorphism";
    case Err::UnsupportedBaseRing: return "UnsupportedBaseRing";
    case Err::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Err::NotSymmetric: return "NotSymmetric";
    case Err::EmptyBlock: return "EmptyBlock";
    case Err::NotCoprime: return "NotCoprime";
    case Err::ProductMismatch: return "ProductMismatch";
    case Err::NotSeparable: return "NotSeparable";
    case Err::NotDivisible: return "NotDivisible";
    case Err::NonInvertibleResult: return "NonInvertibleResult";
    case Err::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

int err_exit_code(Err e) {
  switch (e) {
    case Err::MalformedSpec:
      return 1;
    case Err::NonInvertibleResult:
    case Err::InternalInvariantViolation:
      return 3;
    default:
      return 2;
  }
}

void fail(Err code, const std::string& what) { throw SplitError(code, what); }

}  // namespace splitalg
