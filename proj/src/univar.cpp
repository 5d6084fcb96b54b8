#include "splitalg/univar.hpp"

#include <sstream>

namespace splitalg::uni {

Dense trim(const RingHandle& R, Dense c) {
  while (!c.empty() && R->is_zero(c.back())) c.pop_back();
  return c;
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Dense& a) { return a.empty(); }

Dense zero() { return {}; }

Dense constant(const RingHandle& R, const RingElem& c) {
  if (R->is_zero(c)) return {};
  return {c};
}

Dense monomial(const RingHandle& R, int d, const RingElem& c) {
  if (R->is_zero(c)) return {};
  Dense out(d + 1, R->zero());
  out[d] = c;
  return out;
}

bool eq(const RingHandle& R, const Dense& a, const Dense& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!R->eq(a[i], b[i])) return false;
  return true;
}

Dense add(const RingHandle& R, const Dense& a, const Dense& b) {
  Dense out(std::max(a.size(), b.size()), R->zero());
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = R->add(out[i], a[i]);
    if (i < b.size()) out[i] = R->add(out[i], b[i]);
  }
  return trim(R, std::move(out));
}

Dense sub(const RingHandle& R, const Dense& a, const Dense& b) {
  return add(R, a, neg(R, b));
}

Dense neg(const RingHandle& R, const Dense& a) {
  Dense out = a;
  for (auto& c : out) c = R->neg(c);
  return out;
}

Dense mul(const RingHandle& R, const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, R->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (R->is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = R->add(out[i + j], R->mul(a[i], b[j]));
  }
  return trim(R, std::move(out));
}

Dense scale(const RingHandle& R, const RingElem& c, const Dense& a) {
  if (R->is_zero(c)) return {};
  Dense out = a;
  for (auto& x : out) x = R->mul(c, x);
  return trim(R, std::move(out));
}

RingElem eval(const RingHandle& R, const Dense& a, const RingElem& x) {
  RingElem acc = R->zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = R->add(R->mul(acc, x), *it);
  return acc;
}

Dense derivative(const RingHandle& R, const Dense& a) {
  if (a.size() <= 1) return {};
  Dense out(a.size() - 1, R->zero());
  for (size_t i = 1; i < a.size(); ++i)
    out[i - 1] = R->mul(R->from_int(static_cast<long>(i)), a[i]);
  return trim(R, std::move(out));
}

DivRem divrem(const RingHandle& R, const Dense& a, const Dense& b) {
  if (b.empty()) fail(Err::NotDivisible, "division by the zero polynomial");
  RingElem lead_inv = R->inv(b.back());
  Dense rem = a;
  if (deg(a) < deg(b)) return {Dense{}, trim(R, std::move(rem))};
  Dense quot(a.size() - b.size() + 1, R->zero());
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    size_t top = k + b.size() - 1;
    if (top >= rem.size() || R->is_zero(rem[top])) continue;
    RingElem q = R->mul(rem[top], lead_inv);
    quot[k] = q;
    for (size_t j = 0; j < b.size(); ++j)
      rem[k + j] = R->sub(rem[k + j], R->mul(q, b[j]));
  }
  return {trim(R, std::move(quot)), trim(R, std::move(rem))};
}

Dense div_exact(const RingHandle& R, const Dense& a, const Dense& b) {
  auto [q, r] = divrem(R, a, b);
  if (!is_zero(r)) fail(Err::NotDivisible, "polynomial division left a remainder");
  return q;
}

Dense make_monic(const RingHandle& K, const Dense& a) {
  if (a.empty()) return a;
  if (K->is_one(a.back())) return a;
  return scale(K, K->inv(a.back()), a);
}

Dense gcd(const RingHandle& K, Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = divrem(K, a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(K, a);
}

ExtGcd ext_gcd(const RingHandle& K, const Dense& a, const Dense& b) {
  // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  Dense r0 = a, r1 = b;
  Dense u0 = constant(K, K->one()), u1 = zero();
  Dense v0 = zero(), v1 = constant(K, K->one());
  while (!r1.empty()) {
    auto [q, r] = divrem(K, r0, r1);
    Dense u2 = sub(K, u0, mul(K, q, u1));
    Dense v2 = sub(K, v0, mul(K, q, v1));
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!r0.empty() && !K->is_one(r0.back())) {
    RingElem c = K->inv(r0.back());
    r0 = scale(K, c, r0);
    u0 = scale(K, c, u0);
    v0 = scale(K, c, v0);
  }
  return {r0, u0, v0};
}

Dense mod(const RingHandle& K, const Dense& a, const Dense& m) {
  return divrem(K, a, m).rem;
}

Dense pow_mod(const RingHandle& K, Dense a, mpz_class e, const Dense& m) {
  check_internal(sgn(e) >= 0, "pow_mod requires a nonnegative exponent");
  a = mod(K, a, m);
  Dense acc = mod(K, constant(K, K->one()), m);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mod(K, mul(K, acc, a), m);
    e >>= 1;
    if (sgn(e) > 0) a = mod(K, mul(K, a, a), m);
  }
  return acc;
}

namespace {
std::vector<int> distinct_prime_divisors(int k) {
  std::vector<int> ps;
  for (int l = 2; l * l <= k; ++l) {
    if (k % l == 0) {
      ps.push_back(l);
      while (k % l == 0) k /= l;
    }
  }
  if (k > 1) ps.push_back(k);
  return ps;
}
}  // namespace

bool irreducible_mod(const RingHandle& K, const Dense& g) {
  int k = deg(g);
  if (k <= 0) return false;
  if (k == 1) return true;
  mpz_class q = K->finite_cardinality();
  Dense x = monomial(K, 1, K->one());
  // x^{q^k} == x (mod g)
  mpz_class qk;
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
  if (!eq(K, pow_mod(K, x, qk, g), mod(K, x, g))) return false;
  // gcd(x^{q^{k/l}} - x, g) trivial for every prime l | k
  for (int l : distinct_prime_divisors(k)) {
    mpz_class qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), k / l);
    Dense d = gcd(K, sub(K, pow_mod(K, x, qe, g), mod(K, x, g)), g);
    if (deg(d) != 0) return false;
  }
  return true;
}

Dense least_irreducible(const RingHandle& K, int k) {
  check_internal(k >= 1, "irreducible search needs degree >= 1");
  mpz_class q = K->finite_cardinality();
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), k);
  for (mpz_class i = 0; i < total; ++i) {
    Dense g(k + 1, K->zero());
    g[k] = K->one();
    mpz_class rest = i;
    for (int j = 0; j < k; ++j) {
      mpz_class digit = rest % q;
      rest /= q;
      g[j] = K->element_at(digit);
    }
    if (irreducible_mod(K, g)) return g;
  }
  fail(Err::InternalInvariantViolation, "no irreducible polynomial found");
}

std::string to_string(const RingHandle& R, const Dense& a, const std::string& var) {
  // Render through a throwaway polynomial ring so formatting stays uniform.
  RingHandle P = Ring::poly_ring(R, {var});
  RingElem acc = P->zero();
  for (size_t i = 0; i < a.size(); ++i)
    acc = P->add(acc, P->mul(P->embed(a[i]), P->pow(P->var_elem(var), i)));
  return P->to_string(acc);
}

}  // namespace splitalg::uni
