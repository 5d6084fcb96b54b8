#include "splitalg/oracles.hpp"

#include <set>

#include "ring_detail.hpp"
#include "splitalg/linalg.hpp"

namespace splitalg {

namespace {

// Elementary symmetric polynomials e_0..e_n of the declared variables of P,
// by the one-variable-at-a-time recurrence.
std::vector<RingElem> elementary_symmetric(const RingHandle& P) {
  size_t n = P->vars().size();
  std::vector<RingElem> e(n + 1, P->zero());
  e[0] = P->one();
  for (size_t v = 0; v < n; ++v) {
    RingElem tv = P->var_elem(P->vars()[v]);
    for (size_t k = std::min(v + 1, n); k >= 1; --k)
      e[k] = P->add(e[k], P->mul(e[k - 1], tv));
  }
  return e;
}

void require_swap_symmetric(const RingElem& h) {
  const RingHandle& P = h.owner();
  const RingHandle& A0 = P->base();
  size_t n = P->vars().size();
  for (size_t k = 0; k + 1 < n; ++k) {
    MultiPoly::Terms swapped;
    for (const auto& [mono, c] : h.as_poly().terms) {
      std::vector<int> sm = mono;
      std::swap(sm[k], sm[k + 1]);
      swapped.emplace(std::move(sm), c);
    }
    if (!P->eq(h, detail::make_poly_elem(P, A0, std::move(swapped))))
      fail(Err::NotSymmetric, "not invariant under swapping " + P->vars()[k] +
                                  " and " + P->vars()[k + 1]);
  }
}

mpz_class size_to_the(const mpz_class& card, size_t exponent) {
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), card.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return total;
}

std::string describe_set(const std::set<std::string>& s) {
  std::string out = std::to_string(s.size()) + " elements: {";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += x;
    first = false;
  }
  return out + "}";
}

}  // namespace

RingElem resultant_discriminant(const MonicPoly& f) {
  const RingHandle& R = f.ring;
  int n = f.degree();
  if (n <= 1) return R->one();
  size_t dim = static_cast<size_t>(2 * n - 1);
  Matrix m = make_matrix(R, dim, dim);

  // f descending: 1, a_{n-1}, ..., a_0
  std::vector<RingElem> F;
  for (int k = n; k >= 0; --k) F.push_back(f.plain(k));
  // f' at formal degree n-1, descending: n, (n-1) a_{n-1}, ..., 1 a_1
  std::vector<RingElem> D;
  for (int k = n; k >= 1; --k) D.push_back(R->mul(R->from_int(k), f.plain(k)));

  for (int i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j < F.size(); ++j)
      m.at(static_cast<size_t>(i), static_cast<size_t>(i) + j) = F[j];
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < D.size(); ++j)
      m.at(static_cast<size_t>(n - 1 + i), static_cast<size_t>(i) + j) = D[j];

  RingElem det = det_exact(m);
  return (n / 2) % 2 == 1 ? R->neg(det) : det;
}

SymmetricReduction gauss_symmetric_reduction(const RingElem& h) {
  const RingHandle& P = h.owner();
  if (P->kind() != RingKind::PolyRing)
    fail(Err::ElementRingMismatch, "expected a polynomial in t-variables");
  const RingHandle& A0 = P->base();
  size_t n = P->vars().size();
  require_swap_symmetric(h);

  std::vector<std::string> enames;
  for (size_t k = 1; k <= n; ++k) enames.push_back("e" + std::to_string(k));
  RingHandle B = Ring::poly_ring(A0, enames);
  std::vector<RingElem> e = elementary_symmetric(P);

  RingElem expr = B->zero();
  RingElem rem = h;
  while (!P->is_zero(rem)) {
    std::vector<int> mono = rem.as_poly().terms.begin()->first;
    RingElem c = rem.as_poly().terms.begin()->second;
    RingElem bterm = B->embed(c);
    RingElem pterm = P->embed(c);
    for (size_t k = 0; k < n; ++k) {
      int d = mono[k] - (k + 1 < n ? mono[k + 1] : 0);
      check_internal(d >= 0,
                     "leading exponents of a symmetric polynomial descend");
      if (d == 0) continue;
      bterm = B->mul(bterm, B->pow(B->var_elem(enames[k]), d));
      pterm = P->mul(pterm, P->pow(e[k + 1], d));
    }
    expr = B->add(expr, bterm);
    rem = P->sub(rem, pterm);
  }
  return {B, expr};
}

std::vector<SplitElement> exhaustive_invariants(const SplitAlgebraHandle& alg,
                                                size_t cap) {
  const RingHandle& A = alg->base();
  auto card_opt = A->cardinality();
  if (!card_opt)
    fail(Err::SearchSpaceTooLarge, "cannot enumerate an infinite base ring");
  size_t N = alg->basis_size();
  mpz_class total = size_to_the(*card_opt, N);
  if (total > mpz_class(static_cast<unsigned long>(cap)))
    fail(Err::SearchSpaceTooLarge,
         total.get_str() + " elements exceed the cap of " + std::to_string(cap));

  unsigned long card = card_opt->get_ui();
  std::vector<RingElem> elems;
  for (unsigned long i = 0; i < card; ++i)
    elems.push_back(A->element_at(mpz_class(i)));

  std::vector<Perm> swaps;
  for (int k = 1; k < alg->degree(); ++k)
    swaps.push_back(Perm::transposition(alg->degree(), k, k + 1));

  std::vector<SplitElement> fixed;
  std::vector<unsigned long> digits(N, 0);
  for (;;) {
    std::vector<RingElem> c;
    c.reserve(N);
    for (size_t i = 0; i < N; ++i) c.push_back(elems[digits[i]]);
    SplitElement x = alg->from_coordinates(c);
    bool ok = true;
    for (const auto& s : swaps)
      if (!alg->eq(apply_permutation(s, x), x)) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(x);
    size_t p = 0;
    for (; p < N; ++p) {
      if (++digits[p] < card) break;
      digits[p] = 0;
    }
    if (p == N) break;
  }
  return fixed;
}

OracleReport check_discriminant(const MonicPoly& f) {
  OracleReport rep;
  rep.name = "discriminant";
  rep.inputs = f.ring->spec_string() + "; " + monic_to_string(f);
  RingElem oracle = resultant_discriminant(f);
  RingElem main = discriminant(f);
  rep.oracle_value = f.ring->to_string(oracle);
  rep.main_value = f.ring->to_string(main);
  rep.agree = f.ring->eq(oracle, main);
  return rep;
}

OracleReport check_symmetric_reduction(const RingElem& h) {
  OracleReport rep;
  rep.name = "symmetric-reduction";
  rep.inputs = h.owner()->spec_string() + "; " + h.str();
  SymmetricReduction oracle = gauss_symmetric_reduction(h);
  SymmetricReduction main = reduce_symmetric_polynomial(h);
  rep.oracle_value = oracle.expression.str();
  rep.main_value = main.expression.str();

  std::vector<RingElem> imgs;
  for (const auto& v : main.e_ring->vars())
    imgs.push_back(main.e_ring->var_elem(v));
  RingHom rename = RingHom::poly_images(
      oracle.e_ring, main.e_ring, std::move(imgs),
      RingHom::inclusion(oracle.e_ring->base(), main.e_ring));
  rep.agree = main.e_ring->eq(rename(oracle.expression), main.expression);
  return rep;
}

OracleReport check_invariants(const SplitAlgebraHandle& alg, size_t cap) {
  OracleReport rep;
  rep.name = "invariants";
  rep.inputs = alg->base()->spec_string() + "; " + monic_to_string(alg->poly());

  std::set<std::string> oracle_set;
  for (const auto& x : exhaustive_invariants(alg, cap))
    oracle_set.insert(x.str());

  InvariantModule mod = invariant_module(alg);
  const RingHandle& A = alg->base();
  size_t g = mod.generators.size();
  mpz_class total = size_to_the(A->finite_cardinality(), g);
  if (total > mpz_class(static_cast<unsigned long>(cap)))
    fail(Err::SearchSpaceTooLarge, "generator span has " + total.get_str() +
                                       " combinations, cap is " +
                                       std::to_string(cap));
  unsigned long card = A->finite_cardinality().get_ui();
  std::vector<RingElem> elems;
  for (unsigned long i = 0; i < card; ++i)
    elems.push_back(A->element_at(mpz_class(i)));

  std::set<std::string> span_set;
  std::vector<unsigned long> digits(g, 0);
  for (;;) {
    SplitElement x = alg->zero();
    for (size_t i = 0; i < g; ++i)
      x = alg->add(x, alg->mul(alg->from_base(elems[digits[i]]),
                               mod.generators[i]));
    span_set.insert(x.str());
    size_t p = 0;
    for (; p < g; ++p) {
      if (++digits[p] < card) break;
      digits[p] = 0;
    }
    if (p == g) break;
  }

  rep.oracle_value = describe_set(oracle_set);
  rep.main_value = describe_set(span_set);
  rep.agree = oracle_set == span_set;
  return rep;
}

}  // namespace splitalg
