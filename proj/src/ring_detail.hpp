#pragma once

#include "splitalg/ring.hpp"
#include "splitalg/univar.hpp"

// Shared internals between the ring translation units.  Nothing here is part
// of the public surface.
namespace splitalg::detail {

// Coefficient ring of a polynomial payload: the declared base for PolyRing,
// the base field of the inner polynomial ring for quotient-like kinds.
const RingHandle& payload_coeff_ring(const Ring& r);
size_t exp_width(const Ring& r);

bool is_quot_like(const Ring& r);  // QuotientRing or FiniteField

// Canonicalize (drop zero coefficients) and wrap.
RingElem make_poly_elem(const RingHandle& owner, const RingHandle& coeffR,
                        MultiPoly::Terms t);

MultiPoly::Terms terms_add(const RingHandle& coeffR, const MultiPoly::Terms& a,
                           const MultiPoly::Terms& b, bool subtract);
MultiPoly::Terms terms_neg(const RingHandle& coeffR, const MultiPoly::Terms& a);
MultiPoly::Terms terms_mul(const RingHandle& coeffR, const MultiPoly::Terms& a,
                           const MultiPoly::Terms& b);

// Univariate payloads only.
uni::Dense payload_to_dense(const Ring& owner, const RingElem& x);
RingElem quot_from_dense(const RingHandle& owner, uni::Dense rep);
RingElem polyring_from_dense(const RingHandle& P, const uni::Dense& c);
uni::Dense polyring_to_dense(const Ring& P, const RingElem& x);

// Fraction canonicalization: monic denominator, coprime parts.
RingElem make_frac(const RingHandle& owner, RingElem num, RingElem den);

// Sign-aware rendering of a term map with the given variable names.
std::string render_terms(const MultiPoly::Terms& terms, const RingHandle& coeffR,
                         const std::vector<std::string>& names);

}  // namespace splitalg::detail
