#pragma once

#include "splitalg/univar.hpp"

namespace splitalg {

/// One monic irreducible factor with its multiplicity.
struct PolyFactor {
  uni::Dense poly;
  int multiplicity;
};

/// Complete factorization of a monic polynomial over a finite field into
/// monic irreducibles.  Output order is canonical (degree, then coefficient
/// order), and the internal randomness is seeded from the input, so equal
/// inputs give byte-identical results.
std::vector<PolyFactor> factor_finite_field(const RingHandle& K, const uni::Dense& f);

/// Product of the distinct monic irreducible factors.
uni::Dense squarefree_part(const RingHandle& K, const uni::Dense& f);

/// True when gcd(f, f') is constant.
bool is_separable_poly(const RingHandle& K, const uni::Dense& f);

/// Roots in K itself, with multiplicities, in canonical element order.
std::vector<std::pair<RingElem, int>> field_roots(const RingHandle& K,
                                                  const uni::Dense& f);

}  // namespace splitalg
