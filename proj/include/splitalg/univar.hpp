#pragma once

#include <vector>

#include "splitalg/ring.hpp"

// Dense univariate polynomial helpers over an explicit coefficient ring.
// A polynomial is a coefficient vector c[0..d] (c[0] = constant term) with
// c.back() nonzero; the zero polynomial is the empty vector.  These are the
// workhorse routines behind quotient-ring reduction, gcds over fields,
// finite-field factorization and resultants.
namespace splitalg::uni {

using Dense = std::vector<RingElem>;

Dense trim(const RingHandle& R, Dense c);
int deg(const Dense& a);  // -1 for zero
bool is_zero(const Dense& a);
Dense zero();
Dense constant(const RingHandle& R, const RingElem& c);
Dense monomial(const RingHandle& R, int d, const RingElem& c);
bool eq(const RingHandle& R, const Dense& a, const Dense& b);

Dense add(const RingHandle& R, const Dense& a, const Dense& b);
Dense sub(const RingHandle& R, const Dense& a, const Dense& b);
Dense neg(const RingHandle& R, const Dense& a);
Dense mul(const RingHandle& R, const Dense& a, const Dense& b);
Dense scale(const RingHandle& R, const RingElem& c, const Dense& a);
RingElem eval(const RingHandle& R, const Dense& a, const RingElem& x);
Dense derivative(const RingHandle& R, const Dense& a);

/// Division with remainder by a divisor whose leading coefficient is a unit
/// (always possible for monic divisors over any commutative ring).
struct DivRem {
  Dense quot, rem;
};
DivRem divrem(const RingHandle& R, const Dense& a, const Dense& b);

/// Exact quotient; NotDivisible if a remainder survives.
Dense div_exact(const RingHandle& R, const Dense& a, const Dense& b);

/// Monic gcd over a field (zero polynomial for gcd(0,0)).
Dense gcd(const RingHandle& K, Dense a, Dense b);

/// Extended Euclid over a field: g = u*a + v*b with g the monic gcd.
struct ExtGcd {
  Dense g, u, v;
};
ExtGcd ext_gcd(const RingHandle& K, const Dense& a, const Dense& b);

Dense make_monic(const RingHandle& K, const Dense& a);

/// a^e mod m over a field (m nonconstant, a reduced or not).
Dense pow_mod(const RingHandle& K, Dense a, mpz_class e, const Dense& m);

Dense mod(const RingHandle& K, const Dense& a, const Dense& m);

/// Rabin irreducibility test over a finite field.
bool irreducible_mod(const RingHandle& K, const Dense& g);

/// Lexicographically least monic irreducible of degree k over the finite
/// field K, under K's canonical element enumeration (deterministic).
Dense least_irreducible(const RingHandle& K, int k);

std::string to_string(const RingHandle& R, const Dense& a, const std::string& var);

}  // namespace splitalg::uni
