#include "splitalg/factor.hpp"

#include <algorithm>
#include <random>

namespace splitalg {

namespace {

void require_finite_field(const RingHandle& K) {
  if (!K->is_field() || !K->cardinality())
    fail(Err::NotFiniteField, K->spec_string() + " is not a finite field");
}

// Compare dense polynomials of equal degree coefficientwise from the top.
bool dense_less(const RingHandle& K, const uni::Dense& a, const uni::Dense& b) {
  if (uni::deg(a) != uni::deg(b)) return uni::deg(a) < uni::deg(b);
  for (size_t i = a.size(); i-- > 0;) {
    int c = K->cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Inverse Frobenius: input has nonzero coefficients only at exponents
// divisible by p; each coefficient c maps to its p-th root c^(q/p).
uni::Dense pth_root(const RingHandle& K, const uni::Dense& f) {
  mpz_class p = K->characteristic();
  mpz_class e = K->finite_cardinality() / p;
  size_t pl = p.get_ui();
  uni::Dense out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (K->is_zero(f[i])) continue;
    check_internal(i % pl == 0, "pth root of a polynomial with mixed exponents");
    size_t j = i / pl;
    if (out.size() <= j) out.resize(j + 1, K->zero());
    out[j] = K->pow(f[i], e);
  }
  return uni::trim(K, std::move(out));
}

// Square-free decomposition of a monic polynomial, valid in characteristic p.
std::vector<std::pair<uni::Dense, int>> squarefree_decompose(const RingHandle& K,
                                                             uni::Dense f) {
  std::vector<std::pair<uni::Dense, int>> out;
  if (uni::deg(f) < 1) return out;
  int p = static_cast<int>(K->characteristic().get_ui());
  uni::Dense fd = uni::derivative(K, f);
  if (uni::is_zero(fd)) {
    for (auto& [h, m] : squarefree_decompose(K, pth_root(K, f)))
      out.emplace_back(std::move(h), m * p);
    return out;
  }
  uni::Dense g = uni::gcd(K, f, fd);
  uni::Dense w = uni::div_exact(K, f, g);
  int i = 1;
  while (uni::deg(w) > 0) {
    uni::Dense y = uni::gcd(K, w, g);
    uni::Dense fac = uni::div_exact(K, w, y);
    if (uni::deg(fac) > 0) out.emplace_back(std::move(fac), i);
    g = uni::div_exact(K, g, y);
    w = std::move(y);
    ++i;
  }
  if (uni::deg(g) > 0)
    for (auto& [h, m] : squarefree_decompose(K, pth_root(K, g)))
      out.emplace_back(std::move(h), m * p);
  return out;
}

// Distinct-degree split of a monic square-free polynomial: pairs (product of
// the irreducible factors of degree d, d).
std::vector<std::pair<uni::Dense, int>> distinct_degree(const RingHandle& K,
                                                        uni::Dense g) {
  std::vector<std::pair<uni::Dense, int>> out;
  mpz_class q = K->finite_cardinality();
  uni::Dense x = uni::monomial(K, 1, K->one());
  uni::Dense h = uni::mod(K, x, g);
  int d = 0;
  while (uni::deg(g) >= 2 * (d + 1)) {
    ++d;
    h = uni::pow_mod(K, h, q, g);
    uni::Dense gd = uni::gcd(K, uni::sub(K, h, x), g);
    if (uni::deg(gd) > 0) {
      g = uni::div_exact(K, g, gd);
      h = uni::mod(K, h, g);
      out.emplace_back(std::move(gd), d);
    }
  }
  if (uni::deg(g) > 0) out.emplace_back(std::move(g), uni::deg(g));
  return out;
}

// Deterministic seed from the polynomial's canonical text.
uint64_t seed_from(const RingHandle& K, const uni::Dense& g, int d) {
  std::string key = K->spec_string() + "|" + std::to_string(d);
  for (const auto& c : g) key += "," + K->to_string(c);
  return std::hash<std::string>{}(key);
}

uni::Dense random_poly(const RingHandle& K, std::mt19937_64& rng, int deg_below) {
  mpz_class card = K->finite_cardinality();
  uni::Dense a;
  for (int i = 0; i < deg_below; ++i) {
    mpz_class idx = mpz_class(static_cast<unsigned long>(rng())) % card;
    a.push_back(K->element_at(idx));
  }
  return uni::trim(K, std::move(a));
}

// Equal-degree split: g is monic square-free with all irreducible factors of
// degree exactly d.
void equal_degree(const RingHandle& K, const uni::Dense& g, int d,
                  std::mt19937_64& rng, std::vector<uni::Dense>& out) {
  if (uni::deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class q = K->finite_cardinality();
  for (;;) {
    uni::Dense a = random_poly(K, rng, uni::deg(g));
    if (uni::deg(a) < 1) continue;
    uni::Dense h = uni::gcd(K, a, g);
    if (uni::deg(h) == 0) {
      if (mpz_odd_p(q.get_mpz_t())) {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        uni::Dense b = uni::pow_mod(K, a, e, g);
        h = uni::gcd(K, uni::sub(K, b, uni::constant(K, K->one())), g);
      } else {
        // char 2: trace map sum a^(2^i) over F_2
        int bits = static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 1;
        uni::Dense t = uni::mod(K, a, g);
        uni::Dense s = t;
        for (int i = 1; i < bits * d; ++i) {
          t = uni::pow_mod(K, t, 2, g);
          s = uni::add(K, s, t);
        }
        h = uni::gcd(K, s, g);
      }
    }
    if (uni::deg(h) > 0 && uni::deg(h) < uni::deg(g)) {
      equal_degree(K, h, d, rng, out);
      equal_degree(K, uni::div_exact(K, g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFactor> factor_finite_field(const RingHandle& K, const uni::Dense& f) {
  require_finite_field(K);
  if (uni::deg(f) < 0) fail(Err::DegreeMismatch, "cannot factor the zero polynomial");
  if (!K->is_one(f.back())) fail(Err::NonMonicInput, "factorization expects a monic input");
  std::vector<PolyFactor> out;
  for (auto& [sf, mult] : squarefree_decompose(K, f)) {
    for (auto& [gd, d] : distinct_degree(K, std::move(sf))) {
      std::mt19937_64 rng(seed_from(K, gd, d));
      std::vector<uni::Dense> irr;
      equal_degree(K, gd, d, rng, irr);
      for (auto& h : irr) out.push_back(PolyFactor{std::move(h), mult});
    }
  }
  std::sort(out.begin(), out.end(), [&](const PolyFactor& a, const PolyFactor& b) {
    return dense_less(K, a.poly, b.poly);
  });
  return out;
}

uni::Dense squarefree_part(const RingHandle& K, const uni::Dense& f) {
  require_finite_field(K);
  uni::Dense out = uni::constant(K, K->one());
  for (const auto& [sf, mult] : squarefree_decompose(K, f))
    out = uni::mul(K, out, sf);
  return out;
}

bool is_separable_poly(const RingHandle& K, const uni::Dense& f) {
  if (!K->is_field()) fail(Err::NotAField, "separability test needs field coefficients");
  uni::Dense fd = uni::derivative(K, f);
  if (uni::is_zero(fd)) return uni::deg(f) == 0;
  return uni::deg(uni::gcd(K, f, fd)) == 0;
}

std::vector<std::pair<RingElem, int>> field_roots(const RingHandle& K,
                                                  const uni::Dense& f) {
  std::vector<std::pair<RingElem, int>> out;
  for (const auto& fac : factor_finite_field(K, f)) {
    if (uni::deg(fac.poly) != 1) continue;
    out.emplace_back(K->neg(fac.poly[0]), fac.multiplicity);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return K->cmp(a.first, b.first) < 0;
  });
  return out;
}

}  // namespace splitalg
