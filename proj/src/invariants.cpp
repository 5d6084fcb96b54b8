#include "splitalg/invariants.hpp"

#include <algorithm>
#include <set>

#include "ring_detail.hpp"
#include "splitalg/linalg.hpp"

namespace splitalg {
namespace {

// Stacked matrix of the n-1 maps x -> apply_permutation(s_k, x) - x on the
// monomial basis; its right kernel is exactly the fixed module.
Matrix fixed_point_system(const SplitAlgebraHandle& alg) {
  const RingHandle& A = alg->base();
  int n = alg->degree();
  size_t N = alg->basis_size();
  Matrix S = make_matrix(A, static_cast<size_t>(n - 1) * N, N);
  for (int k = 1; k < n; ++k) {
    Perm s = Perm::transposition(n, k, k + 1);
    for (size_t j = 0; j < N; ++j) {
      SplitElement img =
          apply_permutation(s, alg->monomial(alg->basis_exponents()[j], A->one()));
      std::vector<RingElem> col = alg->coordinates(img);
      for (size_t i = 0; i < N; ++i) {
        RingElem v = col[i];
        if (i == j) v = A->sub(v, A->one());
        S.at(static_cast<size_t>(k - 1) * N + i, j) = v;
      }
    }
  }
  return S;
}

std::vector<SplitElement> columns_to_elements(const SplitAlgebraHandle& alg,
                                              const Matrix& kb) {
  std::vector<SplitElement> out;
  size_t N = alg->basis_size();
  check_internal(kb.rows == N, "kernel row count differs from the rank");
  for (size_t j = 0; j < kb.cols; ++j) {
    std::vector<RingElem> c;
    c.reserve(N);
    for (size_t i = 0; i < N; ++i) c.push_back(kb.at(i, j));
    out.push_back(alg->from_coordinates(c));
  }
  return out;
}

// 1 first; keep only generators with support beyond the constant monomial.
// Dropped vectors are base multiples of 1, so the span is unchanged.
std::vector<SplitElement> present(const SplitAlgebraHandle& alg,
                                  const std::vector<SplitElement>& raw) {
  std::vector<SplitElement> gens;
  gens.push_back(alg->one());
  std::set<std::string> seen;
  for (const auto& g : raw) {
    if (alg->is_zero(g) || alg->constant_value(g).has_value()) continue;
    if (seen.insert(alg->to_string(g)).second) gens.push_back(g);
  }
  return gens;
}

void reverify_fixed(const SplitAlgebraHandle& alg, const std::vector<SplitElement>& gens) {
  for (int k = 1; k < alg->degree(); ++k) {
    Perm s = Perm::transposition(alg->degree(), k, k + 1);
    for (const auto& g : gens)
      check_internal(alg->eq(apply_permutation(s, g), g),
                     "computed invariant moved under an adjacent transposition");
  }
}

bool fits_bound(const mpz_class& card, size_t exponent, size_t bound) {
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), card.get_mpz_t(), exponent);
  return total <= mpz_class(static_cast<unsigned long>(bound));
}

// ---- exhaustive enumeration over small finite bases --------------------------

std::vector<SplitElement> exhaustive_generators(const SplitAlgebraHandle& alg,
                                                size_t bound) {
  const RingHandle& A = alg->base();
  size_t N = alg->basis_size();
  unsigned long card = A->finite_cardinality().get_ui();
  std::vector<RingElem> elems;
  std::map<std::string, unsigned long> elem_index;
  for (unsigned long i = 0; i < card; ++i) {
    elems.push_back(A->element_at(mpz_class(i)));
    elem_index.emplace(A->to_string(elems.back()), i);
  }

  std::vector<Perm> swaps;
  for (int k = 1; k < alg->degree(); ++k)
    swaps.push_back(Perm::transposition(alg->degree(), k, k + 1));

  auto index_of = [&](const SplitElement& x) {
    std::vector<RingElem> c = alg->coordinates(x);
    unsigned long idx = 0;
    for (size_t i = c.size(); i-- > 0;)
      idx = idx * card + elem_index.at(A->to_string(c[i]));
    return idx;
  };

  // every fixed element, in enumeration order of coordinate tuples
  std::vector<SplitElement> fixed;
  std::vector<unsigned long> digits(N, 0);
  for (;;) {
    std::vector<RingElem> c;
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

  // greedy sift to a small generating set, starting from the constants
  std::vector<SplitElement> gens{alg->one()};
  std::set<unsigned long> span;
  auto rebuild_span = [&]() {
    span.clear();
    size_t g = gens.size();
    mpz_class combos;
    mpz_pow_ui(combos.get_mpz_t(), mpz_class(card).get_mpz_t(), g);
    if (combos > mpz_class(static_cast<unsigned long>(bound))) return false;
    std::vector<unsigned long> t(g, 0);
    for (;;) {
      SplitElement acc = alg->zero();
      for (size_t i = 0; i < g; ++i)
        acc = alg->add(acc, alg->mul(alg->from_base(elems[t[i]]), gens[i]));
      span.insert(index_of(acc));
      size_t p = 0;
      for (; p < g; ++p) {
        if (++t[p] < card) break;
        t[p] = 0;
      }
      if (p == g) break;
    }
    return true;
  };
  bool tracked = rebuild_span();
  for (const auto& x : fixed) {
    if (alg->is_zero(x)) continue;
    if (tracked && span.count(index_of(x))) continue;
    if (!tracked && alg->constant_value(x).has_value()) continue;
    gens.push_back(x);
    tracked = tracked && rebuild_span();
  }
  return gens;
}

// ---- kernel lifted over the scalar field of a quotient base --------------------

std::vector<SplitElement> lifted_field_generators(const SplitAlgebraHandle& alg) {
  const RingHandle& A = alg->base();
  const RingHandle& K = A->inner_poly()->base();
  size_t d = A->modulus_dense().size() - 1;
  Matrix S = fixed_point_system(alg);
  size_t N = S.cols;

  std::vector<RingElem> gen_pow;
  RingElem g = A->one();
  for (size_t l = 0; l < d; ++l) {
    gen_pow.push_back(g);
    g = A->mul(g, A->generator());
  }

  Matrix big = make_matrix(K, S.rows * d, N * d);
  for (size_t i = 0; i < S.rows; ++i)
    for (size_t j = 0; j < N; ++j) {
      const RingElem& e = S.at(i, j);
      if (A->is_zero(e)) continue;
      for (size_t l = 0; l < d; ++l) {
        uni::Dense dense = detail::payload_to_dense(*A, A->mul(e, gen_pow[l]));
        for (size_t r = 0; r < dense.size(); ++r)
          big.at(i * d + r, j * d + l) = dense[r];
      }
    }

  Matrix kb = field_kernel(big);
  std::vector<SplitElement> out;
  for (size_t col = 0; col < kb.cols; ++col) {
    std::vector<RingElem> coords;
    for (size_t j = 0; j < N; ++j) {
      uni::Dense dense;
      for (size_t l = 0; l < d; ++l) dense.push_back(kb.at(j * d + l, col));
      coords.push_back(detail::quot_from_dense(A, std::move(dense)));
    }
    out.push_back(alg->from_coordinates(coords));
  }
  return out;
}

// ---- kernel lifted through an integer presentation of a finite base --------------

bool presentable_over_z(const RingHandle& R) {
  switch (R->kind()) {
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return true;
    case RingKind::FiniteField:
      return true;
    case RingKind::QuotientRing:
      return presentable_over_z(R->inner_poly()->base());
    case RingKind::Product:
      for (const auto& f : R->factors())
        if (!presentable_over_z(f)) return false;
      return true;
    default:
      return false;
  }
}

void slot_moduli(const RingHandle& R, std::vector<mpz_class>& out) {
  switch (R->kind()) {
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      out.push_back(R->finite_cardinality());
      break;
    case RingKind::FiniteField:
    case RingKind::QuotientRing: {
      size_t d = R->modulus_dense().size() - 1;
      for (size_t l = 0; l < d; ++l) slot_moduli(R->inner_poly()->base(), out);
      break;
    }
    case RingKind::Product:
      for (const auto& f : R->factors()) slot_moduli(f, out);
      break;
    default:
      check_internal(false, "ring without an integer presentation");
  }
}

void flatten_elem(const RingHandle& R, const RingElem& x, std::vector<mpz_class>& out) {
  switch (R->kind()) {
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      out.push_back(x.as_int());
      break;
    case RingKind::FiniteField:
    case RingKind::QuotientRing: {
      const RingHandle& K = R->inner_poly()->base();
      uni::Dense dense = detail::payload_to_dense(*R, x);
      size_t d = R->modulus_dense().size() - 1;
      dense.resize(d, K->zero());
      for (const auto& c : dense) flatten_elem(K, c, out);
      break;
    }
    case RingKind::Product: {
      const auto& fs = R->factors();
      for (size_t i = 0; i < fs.size(); ++i) flatten_elem(fs[i], R->component(x, i), out);
      break;
    }
    default:
      check_internal(false, "ring without an integer presentation");
  }
}

RingElem unflatten_elem(const RingHandle& R, const std::vector<mpz_class>& digits,
                        size_t& pos) {
  switch (R->kind()) {
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return R->from_int(digits[pos++]);
    case RingKind::FiniteField:
    case RingKind::QuotientRing: {
      const RingHandle& K = R->inner_poly()->base();
      size_t d = R->modulus_dense().size() - 1;
      uni::Dense dense;
      for (size_t l = 0; l < d; ++l) dense.push_back(unflatten_elem(K, digits, pos));
      return detail::quot_from_dense(R, std::move(dense));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      for (const auto& f : R->factors()) parts.push_back(unflatten_elem(f, digits, pos));
      return R->tuple(std::move(parts));
    }
    default:
      check_internal(false, "ring without an integer presentation");
      std::abort();
  }
}

std::vector<SplitElement> lifted_z_generators(const SplitAlgebraHandle& alg) {
  const RingHandle& A = alg->base();
  auto Z = Ring::integers();
  std::vector<mpz_class> moduli;
  slot_moduli(A, moduli);
  size_t W = moduli.size();
  Matrix S = fixed_point_system(alg);
  size_t N = S.cols;

  // slot basis elements: unflatten of each unit digit vector
  std::vector<RingElem> slot_basis;
  for (size_t l = 0; l < W; ++l) {
    std::vector<mpz_class> digits(W, 0);
    digits[l] = 1;
    size_t pos = 0;
    slot_basis.push_back(unflatten_elem(A, digits, pos));
  }

  size_t rows = S.rows * W;
  size_t cols = N * W;
  Matrix big = make_matrix(Z, rows, cols + rows);
  for (size_t i = 0; i < S.rows; ++i)
    for (size_t j = 0; j < N; ++j) {
      const RingElem& e = S.at(i, j);
      if (A->is_zero(e)) continue;
      for (size_t l = 0; l < W; ++l) {
        std::vector<mpz_class> f;
        flatten_elem(A, A->mul(e, slot_basis[l]), f);
        for (size_t r = 0; r < W; ++r)
          if (f[r] != 0) big.at(i * W + r, j * W + l) = Z->from_int(f[r]);
      }
    }
  for (size_t r = 0; r < rows; ++r) big.at(r, cols + r) = Z->from_int(moduli[r % W]);

  Matrix kb = integer_kernel(big);
  std::vector<SplitElement> out;
  std::set<std::string> seen;
  for (size_t col = 0; col < kb.cols; ++col) {
    std::vector<mpz_class> digits(W);
    std::vector<RingElem> coords;
    bool nonzero = false;
    for (size_t j = 0; j < N; ++j) {
      for (size_t l = 0; l < W; ++l) {
        mpz_class v = kb.at(j * W + l, col).as_int() % moduli[l];
        if (v < 0) v += moduli[l];
        digits[l] = v;
      }
      size_t pos = 0;
      RingElem c = unflatten_elem(A, digits, pos);
      if (!A->is_zero(c)) nonzero = true;
      coords.push_back(c);
    }
    if (!nonzero) continue;
    SplitElement x = alg->from_coordinates(coords);
    if (seen.insert(alg->to_string(x)).second) out.push_back(x);
  }
  return out;
}

// ---- degree-truncated slice for polynomial-ring bases ------------------------------

void enumerate_monos(size_t vars, int budget, std::vector<int>& probe,
                     std::vector<std::vector<int>>& out) {
  if (probe.size() == vars) {
    out.push_back(probe);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    probe.push_back(e);
    enumerate_monos(vars, budget - e, probe, out);
    probe.pop_back();
  }
}

std::vector<SplitElement> truncated_poly_generators(const SplitAlgebraHandle& alg,
                                                    int D, std::string& engine) {
  const RingHandle& A = alg->base();
  const RingHandle& R0 = A->base();
  bool f = R0->is_field();
  bool z = R0->kind() == RingKind::Integers;
  bool m = R0->kind() == RingKind::IntegersMod;
  if (!f && !z && !m)
    fail(Err::UnsupportedBaseRing,
         "polynomial-ring bases need integer, residue or field coefficients");
  engine = f ? "FieldKernel" : z ? "IntegerKernel" : "HowellKernel";

  Matrix S = fixed_point_system(alg);
  size_t N = S.cols;
  size_t vars = A->vars().size();
  int maxdeg = 0;
  for (const auto& e : S.a) {
    if (A->is_zero(e)) continue;
    for (const auto& [mono, c] : e.as_poly().terms) {
      int dsum = 0;
      for (int v : mono) dsum += v;
      maxdeg = std::max(maxdeg, dsum);
    }
  }

  std::vector<std::vector<int>> in_monos, out_monos;
  std::vector<int> probe;
  enumerate_monos(vars, D, probe, in_monos);
  enumerate_monos(vars, D + maxdeg, probe, out_monos);
  std::map<std::vector<int>, size_t> out_pos;
  for (size_t b = 0; b < out_monos.size(); ++b) out_pos.emplace(out_monos[b], b);

  size_t icount = in_monos.size(), ocount = out_monos.size();
  Matrix big = make_matrix(R0, S.rows * ocount, N * icount);
  for (size_t i = 0; i < S.rows; ++i)
    for (size_t j = 0; j < N; ++j) {
      const RingElem& e = S.at(i, j);
      if (A->is_zero(e)) continue;
      for (const auto& [mono, c] : e.as_poly().terms)
        for (size_t a = 0; a < icount; ++a) {
          std::vector<int> om(mono.size());
          for (size_t s = 0; s < om.size(); ++s) om[s] = mono[s] + in_monos[a][s];
          size_t b = out_pos.at(om);
          RingElem& cell = big.at(i * ocount + b, j * icount + a);
          cell = R0->add(cell, c);
        }
    }

  Matrix kb = f ? field_kernel(big) : z ? integer_kernel(big) : zmod_kernel(big);
  std::vector<SplitElement> out;
  for (size_t col = 0; col < kb.cols; ++col) {
    std::vector<RingElem> coords;
    for (size_t j = 0; j < N; ++j) {
      MultiPoly::Terms t;
      for (size_t a = 0; a < icount; ++a) {
        const RingElem& v = kb.at(j * icount + a, col);
        if (!R0->is_zero(v)) t.emplace(in_monos[a], v);
      }
      coords.push_back(detail::make_poly_elem(A, R0, std::move(t)));
    }
    out.push_back(alg->from_coordinates(coords));
  }
  return out;
}

}  // namespace

InvariantModule invariant_module(const SplitAlgebraHandle& alg,
                                 const InvariantOptions& opt) {
  const RingHandle& A = alg->base();
  InvariantModule out;
  out.algebra = alg;

  if (alg->degree() <= 1) {
    out.generators = {alg->one()};
    out.method = A->is_field()                          ? "FieldKernel"
                 : A->kind() == RingKind::Integers      ? "IntegerKernel"
                 : A->kind() == RingKind::IntegersMod   ? "HowellKernel"
                                                        : "Exhaustive";
    return out;
  }

  std::vector<SplitElement> raw;
  if (A->is_field()) {
    raw = columns_to_elements(alg, field_kernel(fixed_point_system(alg)));
    out.method = "FieldKernel";
  } else if (A->kind() == RingKind::Integers) {
    raw = columns_to_elements(alg, integer_kernel(fixed_point_system(alg)));
    out.method = "IntegerKernel";
  } else if (A->kind() == RingKind::IntegersMod) {
    raw = columns_to_elements(alg, zmod_kernel(fixed_point_system(alg)));
    out.method = "HowellKernel";
  } else if (A->kind() == RingKind::PolyRing) {
    std::string engine;
    raw = truncated_poly_generators(alg, opt.poly_truncation_degree, engine);
    out.method = engine;
    out.complete = false;
    out.truncation_degree = opt.poly_truncation_degree;
    out.generators = present(alg, raw);
    reverify_fixed(alg, out.generators);
    return out;
  } else if (A->kind() == RingKind::QuotientRing) {
    if (A->cardinality() && fits_bound(*A->cardinality(), alg->basis_size(),
                                       opt.exhaustive_bound)) {
      out.generators = exhaustive_generators(alg, opt.exhaustive_bound);
      out.method = "Exhaustive";
      reverify_fixed(alg, out.generators);
      return out;
    }
    raw = lifted_field_generators(alg);
    out.method = "LiftedKernel";
  } else if (A->kind() == RingKind::Product) {
    if (!A->cardinality())
      fail(Err::UnsupportedBaseRing, "product bases must be finite");
    if (fits_bound(*A->cardinality(), alg->basis_size(), opt.exhaustive_bound)) {
      out.generators = exhaustive_generators(alg, opt.exhaustive_bound);
      out.method = "Exhaustive";
      reverify_fixed(alg, out.generators);
      return out;
    }
    if (!presentable_over_z(A))
      fail(Err::UnsupportedBaseRing,
           "no integer presentation for " + A->spec_string());
    raw = lifted_z_generators(alg);
    out.method = "LiftedKernel";
  } else {
    fail(Err::UnsupportedBaseRing,
         "no fixed-module method for " + A->spec_string());
  }

  out.generators = present(alg, raw);
  reverify_fixed(alg, out.generators);
  return out;
}

InvariantsTheoremReport verify_invariants_theorem(const SplitAlgebraHandle& alg,
                                                  const InvariantOptions& opt) {
  const RingHandle& A = alg->base();
  InvariantsTheoremReport rep{
      discriminant(alg), A->is_regular(A->from_int(2)), Regularity{}, false, false,
      true,              invariant_module(alg, opt)};
  rep.discriminant_regular = A->is_regular(rep.discriminant_value);
  rep.hypothesis_holds = rep.two_regular.verdict == Reg::Regular ||
                         rep.discriminant_regular.verdict == Reg::Regular;
  rep.invariants_trivial = rep.module.generators.size() == 1;
  rep.consistent = !(rep.hypothesis_holds && !rep.invariants_trivial);
  return rep;
}

std::vector<ExceptionalFinding> search_exceptional(const ExceptionalSearchSpec& spec) {
  std::vector<ExceptionalFinding> findings;
  InvariantOptions opt;
  opt.exhaustive_bound = spec.max_algebra_size;
  for (const auto& rs : spec.ring_specs) {
    RingHandle A = Ring::parse_spec(rs);
    if (!A->cardinality())
      fail(Err::UnsupportedBaseRing, "search requires finite rings: " + rs);
    mpz_class card = *A->cardinality();
    for (int d : spec.degrees) {
      mpz_class count;
      mpz_pow_ui(count.get_mpz_t(), card.get_mpz_t(), static_cast<unsigned long>(d));
      if (count > mpz_class(static_cast<unsigned long>(spec.max_algebra_size)))
        fail(Err::SearchSpaceTooLarge,
             rs + " has " + count.get_str() + " monic polynomials of degree " +
                 std::to_string(d));
      for (mpz_class idx = 0; idx < count; ++idx) {
        std::vector<RingElem> coeffs;
        mpz_class rest = idx;
        for (int k = 0; k < d; ++k) {
          coeffs.push_back(A->element_at(rest % card));
          rest /= card;
        }
        coeffs.push_back(A->one());
        MonicPoly f = make_monic(A, std::move(coeffs));
        InvariantModule mod = invariant_module(SplitAlgebra::create(f), opt);
        if (mod.generators.size() <= 1) continue;
        ExceptionalFinding finding;
        finding.ring_spec = A->spec_string();
        finding.poly = monic_to_string(f, "t");
        for (size_t g = 1; g < mod.generators.size(); ++g)
          finding.extra_invariants.push_back(mod.algebra->to_string(mod.generators[g]));
        findings.push_back(std::move(finding));
      }
    }
  }
  return findings;
}

SymmetricReduction reduce_symmetric_polynomial(const RingElem& h) {
  const RingHandle& P = h.owner();
  if (P->kind() != RingKind::PolyRing)
    fail(Err::ElementRingMismatch, "expected a polynomial in t-variables");
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

  std::vector<std::string> fnames;
  for (size_t k = 1; k <= n; ++k) fnames.push_back("f" + std::to_string(k));
  RingHandle B = Ring::poly_ring(A0, fnames);
  std::vector<RingElem> es;
  for (const auto& name : fnames) es.push_back(B->var_elem(name));
  SplitAlgebraHandle G = SplitAlgebra::create(monic_from_signed(B, es));

  std::map<std::pair<int, int>, SplitElement> pow_memo;
  auto root_pow = [&](int i, int e) {
    auto it = pow_memo.find({i, e});
    if (it != pow_memo.end()) return it->second;
    SplitElement v = G->pow(G->root(i), e);
    pow_memo.emplace(std::make_pair(i, e), v);
    return v;
  };
  SplitElement acc = G->zero();
  for (const auto& [mono, c] : h.as_poly().terms) {
    SplitElement term = G->from_base(B->embed(c));
    for (size_t s = 0; s < mono.size(); ++s)
      if (mono[s] > 0) term = G->mul(term, root_pow(static_cast<int>(s) + 1, mono[s]));
    acc = G->add(acc, term);
  }
  auto cv = G->constant_value(acc);
  check_internal(cv.has_value(), "symmetric evaluation left the base ring");
  return {B, *cv};
}

}  // namespace splitalg
