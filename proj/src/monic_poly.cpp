#include "splitalg/monic_poly.hpp"

#include "ring_detail.hpp"

namespace splitalg {

MonicPoly make_monic(RingHandle A, std::vector<RingElem> plain_coeffs) {
  check_internal(A != nullptr, "monic polynomial needs a ring");
  if (plain_coeffs.empty())
    fail(Err::NonMonicInput, "a monic polynomial needs a leading coefficient");
  for (const auto& c : plain_coeffs)
    if (!c.valid() || !same_ring(c.owner(), A))
      fail(Err::ElementRingMismatch, "coefficient outside the declared ring");
  if (!A->is_one(plain_coeffs.back()))
    fail(Err::NonMonicInput, "leading coefficient is " +
                                 A->to_string(plain_coeffs.back()) + ", expected 1");
  return MonicPoly{std::move(A), std::move(plain_coeffs)};
}

MonicPoly monic_from_signed(RingHandle A, const std::vector<RingElem>& e) {
  size_t n = e.size();
  std::vector<RingElem> plain(n + 1, A->one());
  for (size_t k = 1; k <= n; ++k) {
    RingElem c = e[k - 1];
    if (k % 2 == 1) c = A->neg(c);
    plain[n - k] = c;
  }
  return make_monic(std::move(A), std::move(plain));
}

RingElem signed_coefficient(const MonicPoly& f, int k) {
  int n = f.degree();
  if (k < 0 || k > n) fail(Err::IndexOutOfRange, "signed coefficient index out of range");
  RingElem c = f.coeffs[static_cast<size_t>(n - k)];
  return k % 2 == 1 ? f.ring->neg(c) : c;
}

bool monic_eq(const MonicPoly& a, const MonicPoly& b) {
  if (!same_ring(a.ring, b.ring) || a.degree() != b.degree()) return false;
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (!a.ring->eq(a.coeffs[i], b.coeffs[i])) return false;
  return true;
}

MonicPoly monic_mul(const MonicPoly& a, const MonicPoly& b) {
  if (!same_ring(a.ring, b.ring))
    fail(Err::RingMismatch, "factors live over different rings");
  return make_monic(a.ring, uni::mul(a.ring, a.coeffs, b.coeffs));
}

RingElem eval_monic(const MonicPoly& f, const RingElem& x) {
  return uni::eval(f.ring, f.coeffs, x);
}

std::vector<RingElem> derivative_coeffs(const MonicPoly& f) {
  return uni::derivative(f.ring, f.coeffs);
}

SyntheticDiv synthetic_divide(const MonicPoly& f, const RingElem& r) {
  const RingHandle& A = f.ring;
  if (!same_ring(r.owner(), A))
    fail(Err::ElementRingMismatch, "division point outside the coefficient ring");
  int n = f.degree();
  if (n < 1) fail(Err::DegreeMismatch, "cannot divide a constant by a linear factor");
  std::vector<RingElem> q(static_cast<size_t>(n), A->zero());
  RingElem carry = f.coeffs.back();
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = carry;
    carry = A->add(f.coeffs[static_cast<size_t>(k)], A->mul(r, carry));
  }
  return SyntheticDiv{make_monic(A, std::move(q)), carry};
}

MonicPoly parse_monic(const RingHandle& A, const std::string& text,
                      const std::string& var) {
  RingHandle P = Ring::poly_ring(A, {var});
  RingElem e = P->parse(text);
  uni::Dense dense = detail::polyring_to_dense(*P, e);
  if (uni::is_zero(dense)) fail(Err::NonMonicInput, "the zero polynomial is not monic");
  // Coefficients of P are base elements already; reuse them directly.
  return make_monic(A, std::move(dense));
}

std::string monic_to_string(const MonicPoly& f, const std::string& var) {
  return uni::to_string(f.ring, f.coeffs, var);
}

}  // namespace splitalg
