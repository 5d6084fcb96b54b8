#pragma once

#include "splitalg/ring.hpp"
#include "splitalg/univar.hpp"

namespace splitalg {

/// Monic univariate polynomial over a commutative ring, stored dense as plain
/// coefficients a_0..a_n with a_n = 1.  The degree-0 case (the constant 1) is
/// allowed; everything downstream treats it as the empty product.
struct MonicPoly {
  RingHandle ring;
  std::vector<RingElem> coeffs;  // coeffs[k] multiplies t^k, back() == 1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const RingElem& plain(int k) const { return coeffs[static_cast<size_t>(k)]; }
};

/// Wrap and validate plain coefficients (constant first, leading 1 last).
MonicPoly make_monic(RingHandle A, std::vector<RingElem> plain_coeffs);

/// Build degree n from the signed view e_1..e_n, where the polynomial is
/// t^n - e_1 t^{n-1} + e_2 t^{n-2} - ... + (-1)^n e_n.
MonicPoly monic_from_signed(RingHandle A, const std::vector<RingElem>& e);

/// Signed coefficient e_k = (-1)^k a_{n-k} for 0 <= k <= n (e_0 = 1).
RingElem signed_coefficient(const MonicPoly& f, int k);

bool monic_eq(const MonicPoly& a, const MonicPoly& b);
MonicPoly monic_mul(const MonicPoly& a, const MonicPoly& b);
RingElem eval_monic(const MonicPoly& f, const RingElem& x);
std::vector<RingElem> derivative_coeffs(const MonicPoly& f);

/// Quotient and remainder of division by (t - r): f = (t - r) q + f(r).
struct SyntheticDiv {
  MonicPoly quotient;
  RingElem remainder;
};
SyntheticDiv synthetic_divide(const MonicPoly& f, const RingElem& r);

/// Parse "t^2 - 3*t + 2" style text over A; every non-variable symbol is
/// resolved through A's own parser, so ring constants like u or s work.
MonicPoly parse_monic(const RingHandle& A, const std::string& text,
                      const std::string& var = "t");

std::string monic_to_string(const MonicPoly& f, const std::string& var = "t");

}  // namespace splitalg
