#pragma once

#include "splitalg/invariants.hpp"

namespace splitalg {

/// Outcome of one cross-check: an independent brute-force recomputation
/// against the main implementation.  agree compares canonical forms, never
/// strings; the string fields are for reporting only.
struct OracleReport {
  std::string name;
  std::string inputs;
  std::string oracle_value;
  std::string main_value;
  bool agree = false;
};

/// Discriminant recomputed from scratch: (-1)^(n(n-1)/2) times the Sylvester
/// determinant of (f, f'), with f' padded to formal degree n-1 so the formula
/// survives characteristics dividing the top exponents.  The base ring must
/// support an exact determinant (fields, integers, polynomial rings over
/// those, residue rings).
RingElem resultant_discriminant(const MonicPoly& f);

/// Classical leading-monomial elimination.  Repeatedly peels the lex-leading
/// term c*t1^a1*...*tn^an of h (a1 >= ... >= an by symmetry) by subtracting
/// c*e1^(a1-a2)*e2^(a2-a3)*...*en^an, with the e_k expanded back into the
/// t-variables; the recorded e-monomials accumulate into the answer over
/// A[e1..en].  h must be invariant under the adjacent variable swaps.
SymmetricReduction gauss_symmetric_reduction(const RingElem& h);

/// Every element of the splitting algebra fixed by the adjacent root swaps,
/// found by plain enumeration of all coordinate tuples over a finite base.
/// The enumeration order is the mixed-radix order of coordinate tuples, so
/// the result is deterministic.  |A|^rank must stay at or below cap.
std::vector<SplitElement> exhaustive_invariants(const SplitAlgebraHandle& alg,
                                                size_t cap = 1u << 16);

/// Sylvester-determinant discriminant vs the root-difference product.
OracleReport check_discriminant(const MonicPoly& f);

/// Gauss elimination vs rewriting through the generic splitting algebra.
/// The two expressions live over independently created polynomial rings and
/// are compared after renaming e_k to f_k.
OracleReport check_symmetric_reduction(const RingElem& h);

/// Enumerated fixed set vs the span of the invariant_module generators, both
/// materialized as element sets over the finite base.
OracleReport check_invariants(const SplitAlgebraHandle& alg, size_t cap = 1u << 16);

}  // namespace splitalg
