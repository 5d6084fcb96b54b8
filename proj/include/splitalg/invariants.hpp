#pragma once

#include "splitalg/splitting.hpp"

namespace splitalg {

/// Generating set of the module of elements fixed by every permutation of the
/// universal roots.  The constant 1 always comes first; remaining generators
/// have support beyond the constant basis monomial.
struct InvariantModule {
  SplitAlgebraHandle algebra;
  std::vector<SplitElement> generators;
  /// FieldKernel | IntegerKernel | HowellKernel | Exhaustive | LiftedKernel
  std::string method;
  /// False when the base is a polynomial ring and the computation ran on the
  /// finite slice of coordinate total degree <= truncation_degree.
  bool complete = true;
  int truncation_degree = -1;
};

struct InvariantOptions {
  /// Exhaustive fixed-set enumeration is used for finite non-field bases when
  /// |A|^(n!) stays at or below this bound; larger cases fall back to a
  /// kernel computation lifted through the ring's defining presentation.
  size_t exhaustive_bound = 65536;
  /// Coordinate degree cap for polynomial-ring bases.
  int poly_truncation_degree = 4;
};

/// The module of fixed elements, computed as the simultaneous kernel of
/// x -> apply_permutation(s, x) - x over the n-1 adjacent transpositions s.
/// Every returned generator is re-verified to be fixed.
InvariantModule invariant_module(const SplitAlgebraHandle& alg,
                                 const InvariantOptions& opt = {});

/// Checks the two sufficient conditions for the fixed module to be exactly
/// the base ring: regularity of 2 in A, and regularity of the discriminant
/// in A.  Either one forces triviality; a computed counterexample to that
/// implication is a fatal inconsistency, reported via consistent = false.
struct InvariantsTheoremReport {
  RingElem discriminant_value;
  Regularity two_regular;
  Regularity discriminant_regular;
  bool hypothesis_holds = false;
  bool invariants_trivial = false;
  bool consistent = true;
  InvariantModule module;
};

InvariantsTheoremReport verify_invariants_theorem(const SplitAlgebraHandle& alg,
                                                  const InvariantOptions& opt = {});

/// Brute-force search for base rings and polynomials whose fixed module is
/// strictly bigger than A.
struct ExceptionalSearchSpec {
  std::vector<std::string> ring_specs;
  std::vector<int> degrees;
  size_t max_algebra_size = 65536;
};

struct ExceptionalFinding {
  std::string ring_spec;
  std::string poly;
  std::vector<std::string> extra_invariants;  // generator strings beyond 1
};

std::vector<ExceptionalFinding> search_exceptional(const ExceptionalSearchSpec& spec);

/// Rewrites a symmetric polynomial h in t_1..t_n over A as a polynomial in
/// the elementary symmetric functions, returned over A[f_1..f_n] where f_k
/// stands for the k-th elementary symmetric polynomial of t_1..t_n.  h must
/// be invariant under the n-1 adjacent variable swaps.
struct SymmetricReduction {
  RingHandle e_ring;    // A[f_1..f_n]
  RingElem expression;  // the rewritten polynomial
};

SymmetricReduction reduce_symmetric_polynomial(const RingElem& h);

}  // namespace splitalg
