#include "splitalg/decompose.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "splitalg/error.hpp"
#include "splitalg/factor.hpp"
#include "splitalg/invariants.hpp"
#include "splitalg/univar.hpp"
#include "ring_detail.hpp"

namespace splitalg {

namespace {

void require_same_tensor(const TensorElement& a, const TensorElement& b) {
  if (a.algebra().get() != b.algebra().get())
    fail(Err::AlgebraMismatch, "tensor elements live in different tensor algebras");
}

std::string fresh_var(const RingHandle& A, const std::string& stem) {
  auto used = A->var_table();
  if (!used.count(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string c = stem + std::to_string(i);
    if (!used.count(c)) return c;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// tensor algebra

TensorAlgebraHandle TensorAlgebra::create(std::vector<SplitAlgebraHandle> factors) {
  if (factors.empty()) fail(Err::MalformedSpec, "tensor product needs at least one factor");
  auto T = std::shared_ptr<TensorAlgebra>(new TensorAlgebra());
  T->base_ = factors.front()->base();
  for (const auto& F : factors)
    if (!same_ring(F->base(), T->base_))
      fail(Err::RingMismatch, "tensor factors must share one coefficient ring");
  T->factors_ = std::move(factors);

  size_t total = 1;
  for (const auto& F : T->factors_) {
    T->offset_.push_back(T->width_);
    int nf = F->degree();
    T->width_ += static_cast<size_t>(nf > 1 ? nf - 1 : 0);
    total *= F->basis_size();
    for (int k = 2; k <= nf; ++k)
      T->names_.push_back("tau" + std::to_string(k) + "_" +
                          std::to_string(T->offset_.size()));
  }
  for (size_t idx = 0; idx < total; ++idx) {
    size_t tmp = idx;
    std::vector<size_t> digit(T->factors_.size());
    for (size_t j = T->factors_.size(); j-- > 0;) {
      digit[j] = tmp % T->factors_[j]->basis_size();
      tmp /= T->factors_[j]->basis_size();
    }
    std::vector<int> key;
    key.reserve(T->width_);
    for (size_t j = 0; j < T->factors_.size(); ++j) {
      const auto& e = T->factors_[j]->basis_exponents()[digit[j]];
      key.insert(key.end(), e.begin(), e.end());
    }
    T->basis_pos_[key] = idx;
    T->basis_.push_back(std::move(key));
  }
  return T;
}

size_t TensorAlgebra::basis_index(const std::vector<int>& exp) const {
  auto it = basis_pos_.find(exp);
  if (it == basis_pos_.end()) fail(Err::IndexOutOfRange, "not a tensor basis exponent tuple");
  return it->second;
}

std::vector<int> TensorAlgebra::slice(const std::vector<int>& key, size_t j) const {
  size_t b = offset_[j];
  size_t e = (j + 1 < offset_.size()) ? offset_[j + 1] : width_;
  return std::vector<int>(key.begin() + static_cast<long>(b), key.begin() + static_cast<long>(e));
}

TensorElement TensorAlgebra::zero() const { return TensorElement(shared_from_this(), {}); }

TensorElement TensorAlgebra::from_base(const RingElem& a) const {
  require_same_ring(a, base_->zero());
  Coords c;
  if (!base_->is_zero(a)) c.emplace(std::vector<int>(width_, 0), a);
  return TensorElement(shared_from_this(), std::move(c));
}

TensorElement TensorAlgebra::one() const { return from_base(base_->one()); }

TensorElement TensorAlgebra::embed_factor(size_t j, const SplitElement& x) const {
  if (j >= factors_.size()) fail(Err::IndexOutOfRange, "tensor factor index out of range");
  if (x.algebra().get() != factors_[j].get())
    fail(Err::AlgebraMismatch, "element does not live in the requested tensor factor");
  Coords c;
  for (const auto& [key, coeff] : x.coords()) {
    std::vector<int> full(width_, 0);
    std::copy(key.begin(), key.end(), full.begin() + static_cast<long>(offset_[j]));
    c.emplace(std::move(full), coeff);
  }
  return TensorElement(shared_from_this(), std::move(c));
}

TensorElement TensorAlgebra::root_image(int k, size_t j) const {
  if (j >= factors_.size()) fail(Err::IndexOutOfRange, "tensor factor index out of range");
  return embed_factor(j, factors_[j]->root(k));
}

TensorElement TensorAlgebra::add(const TensorElement& a, const TensorElement& b) const {
  require_same_tensor(a, b);
  Coords c = a.c_;
  for (const auto& [key, coeff] : b.c_) {
    auto it = c.find(key);
    if (it == c.end()) {
      c.emplace(key, coeff);
    } else {
      it->second = base_->add(it->second, coeff);
      if (base_->is_zero(it->second)) c.erase(it);
    }
  }
  return TensorElement(shared_from_this(), std::move(c));
}

TensorElement TensorAlgebra::neg(const TensorElement& a) const {
  Coords c;
  for (const auto& [key, coeff] : a.c_) c.emplace(key, base_->neg(coeff));
  return TensorElement(shared_from_this(), std::move(c));
}

TensorElement TensorAlgebra::sub(const TensorElement& a, const TensorElement& b) const {
  return add(a, neg(b));
}

void TensorAlgebra::accumulate_product(Coords& out, const std::vector<int>& ka,
                                        const std::vector<int>& kb, const RingElem& c) const {
  std::vector<std::pair<std::vector<int>, RingElem>> acc{{{}, c}};
  for (size_t j = 0; j < factors_.size(); ++j) {
    const auto& F = factors_[j];
    SplitElement p = F->mul(F->monomial(slice(ka, j), base_->one()),
                            F->monomial(slice(kb, j), base_->one()));
    std::vector<std::pair<std::vector<int>, RingElem>> next;
    for (const auto& [prefix, pc] : acc) {
      for (const auto& [kj, cj] : p.coords()) {
        std::vector<int> key = prefix;
        key.insert(key.end(), kj.begin(), kj.end());
        next.emplace_back(std::move(key), base_->mul(pc, cj));
      }
    }
    acc = std::move(next);
  }
  for (auto& [key, coeff] : acc) {
    auto it = out.find(key);
    if (it == out.end()) {
      if (!base_->is_zero(coeff)) out.emplace(std::move(key), std::move(coeff));
    } else {
      it->second = base_->add(it->second, coeff);
      if (base_->is_zero(it->second)) out.erase(it);
    }
  }
}

TensorElement TensorAlgebra::mul(const TensorElement& a, const TensorElement& b) const {
  require_same_tensor(a, b);
  Coords out;
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_) accumulate_product(out, ka, kb, base_->mul(ca, cb));
  return TensorElement(shared_from_this(), std::move(out));
}

TensorElement TensorAlgebra::pow(const TensorElement& a, const mpz_class& e) const {
  check_internal(e >= 0, "tensor power needs a nonnegative exponent");
  TensorElement r = one();
  TensorElement b = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
    k >>= 1;
    if (k > 0) b = mul(b, b);
  }
  return r;
}

bool TensorAlgebra::is_zero(const TensorElement& a) const { return a.c_.empty(); }

bool TensorAlgebra::eq(const TensorElement& a, const TensorElement& b) const {
  require_same_tensor(a, b);
  return is_zero(sub(a, b));
}

std::vector<RingElem> TensorAlgebra::coordinates(const TensorElement& x) const {
  std::vector<RingElem> out(basis_.size(), base_->zero());
  for (const auto& [key, coeff] : x.c_) out[basis_pos_.at(key)] = coeff;
  return out;
}

TensorElement TensorAlgebra::from_coordinates(const std::vector<RingElem>& c) const {
  if (c.size() != basis_.size())
    fail(Err::DegreeMismatch, "tensor coordinate vector has the wrong length");
  Coords out;
  for (size_t i = 0; i < c.size(); ++i) {
    require_same_ring(c[i], base_->zero());
    if (!base_->is_zero(c[i])) out.emplace(basis_[i], c[i]);
  }
  return TensorElement(shared_from_this(), std::move(out));
}

std::string TensorAlgebra::to_string(const TensorElement& x) const {
  return detail::render_terms(x.c_, base_, names_);
}

std::string TensorElement::to_string() const { return alg_->to_string(*this); }
bool TensorElement::is_zero() const { return alg_->is_zero(*this); }
bool TensorElement::operator==(const TensorElement& o) const { return alg_->eq(*this, o); }
TensorElement TensorElement::operator+(const TensorElement& o) const { return alg_->add(*this, o); }
TensorElement TensorElement::operator-(const TensorElement& o) const { return alg_->sub(*this, o); }
TensorElement TensorElement::operator*(const TensorElement& o) const { return alg_->mul(*this, o); }
TensorElement TensorElement::operator-() const { return alg_->neg(*this); }

// ---------------------------------------------------------------------------
// algebra homomorphisms

struct AlgebraHom::Impl {
  Target kind;
  SplitAlgebraHandle src;
  RingHom coeff;
  RingHandle ring_dst;
  SplitAlgebraHandle split_dst;
  TensorAlgebraHandle tensor_dst;
  std::vector<RingElem> r_roots;
  std::vector<SplitElement> s_roots;
  std::vector<TensorElement> t_roots;
};

namespace {

struct RingOps {
  RingHandle R;
  using El = RingElem;
  El scalar(const RingElem& c) const { return c; }
  El zero() const { return R->zero(); }
  El one() const { return R->one(); }
  El add(const El& a, const El& b) const { return R->add(a, b); }
  El sub(const El& a, const El& b) const { return R->sub(a, b); }
  El mul(const El& a, const El& b) const { return R->mul(a, b); }
  bool eq(const El& a, const El& b) const { return R->is_zero(R->sub(a, b)); }
};

struct SplitOps {
  SplitAlgebraHandle A;
  using El = SplitElement;
  El scalar(const RingElem& c) const { return A->from_base(c); }
  El zero() const { return A->zero(); }
  El one() const { return A->one(); }
  El add(const El& a, const El& b) const { return A->add(a, b); }
  El sub(const El& a, const El& b) const { return A->sub(a, b); }
  El mul(const El& a, const El& b) const { return A->mul(a, b); }
  bool eq(const El& a, const El& b) const { return A->eq(a, b); }
};

struct TensorOps {
  TensorAlgebraHandle T;
  using El = TensorElement;
  El scalar(const RingElem& c) const { return T->from_base(c); }
  El zero() const { return T->zero(); }
  El one() const { return T->one(); }
  El add(const El& a, const El& b) const { return T->add(a, b); }
  El sub(const El& a, const El& b) const { return T->sub(a, b); }
  El mul(const El& a, const El& b) const { return T->mul(a, b); }
  bool eq(const El& a, const El& b) const { return T->eq(a, b); }
};

// The linear factors of the root images must multiply back to the image of f.
template <class Ops>
void verify_factorization(const Ops& ops, const MonicPoly& f, const RingHom& coeff,
                          const std::vector<typename Ops::El>& roots) {
  size_t n = f.coeffs.size() - 1;
  if (roots.size() != n)
    fail(Err::NotACompleteFactorization,
         "expected " + std::to_string(n) + " root images, got " + std::to_string(roots.size()));
  std::vector<typename Ops::El> prod{ops.one()};
  for (const auto& r : roots) {
    std::vector<typename Ops::El> next(prod.size() + 1, ops.zero());
    for (size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = ops.add(next[k + 1], prod[k]);
      next[k] = ops.sub(next[k], ops.mul(r, prod[k]));
    }
    prod = std::move(next);
  }
  for (size_t k = 0; k <= n; ++k) {
    if (!ops.eq(prod[k], ops.scalar(coeff(f.coeffs[k]))))
      fail(Err::NotACompleteFactorization,
           "root images do not factor the image of f: coefficient of t^" + std::to_string(k) +
               " differs");
  }
}

template <class Ops>
typename Ops::El eval_at_roots(const Ops& ops, const SplitAlgebra& A, const SplitElement& x,
                               const RingHom& coeff, const std::vector<typename Ops::El>& roots) {
  std::vector<std::vector<typename Ops::El>> pw(roots.size());
  auto power = [&](size_t i, int e) -> const typename Ops::El& {
    auto& tab = pw[i];
    if (tab.empty()) tab.push_back(ops.one());
    while (static_cast<int>(tab.size()) <= e) tab.push_back(ops.mul(tab.back(), roots[i]));
    return tab[static_cast<size_t>(e)];
  };
  typename Ops::El out = ops.zero();
  for (const auto& [key, c] : x.coords()) {
    typename Ops::El term = ops.scalar(coeff(c));
    for (size_t s = 0; s < key.size(); ++s)
      if (key[s] > 0) term = ops.mul(term, power(s + 1, key[s]));
    out = ops.add(out, term);
  }
  (void)A;
  return out;
}

void check_coeff_endpoints(const SplitAlgebraHandle& src, const RingHom& coeff,
                           const RingHandle& target_base) {
  if (!same_ring(coeff.src(), src->base()))
    fail(Err::RingMismatch, "coefficient map must start at the coefficient ring of f");
  if (!same_ring(coeff.dst(), target_base))
    fail(Err::RingMismatch, "coefficient map must land in the target coefficient ring");
}

}  // namespace

AlgebraHom AlgebraHom::to_ring(SplitAlgebraHandle src, RingHom coeff,
                               std::vector<RingElem> roots) {
  check_coeff_endpoints(src, coeff, coeff.dst());
  for (const auto& r : roots)
    if (!same_ring(r.owner(), coeff.dst()))
      fail(Err::RingMismatch, "root images must live in the target ring");
  verify_factorization(RingOps{coeff.dst()}, src->poly(), coeff, roots);
  RingHandle dst = coeff.dst();
  auto impl = std::shared_ptr<const Impl>(new Impl{Target::Ring, std::move(src), std::move(coeff),
                                                   std::move(dst), nullptr, nullptr,
                                                   std::move(roots), {}, {}});
  return AlgebraHom(std::move(impl));
}

AlgebraHom AlgebraHom::to_split(SplitAlgebraHandle src, SplitAlgebraHandle dst, RingHom coeff,
                                std::vector<SplitElement> roots) {
  check_coeff_endpoints(src, coeff, dst->base());
  for (const auto& r : roots)
    if (r.algebra().get() != dst.get())
      fail(Err::AlgebraMismatch, "root images must live in the target splitting algebra");
  verify_factorization(SplitOps{dst}, src->poly(), coeff, roots);
  auto impl = std::shared_ptr<const Impl>(new Impl{Target::Split, src, std::move(coeff), nullptr,
                                                   std::move(dst), nullptr, {}, std::move(roots),
                                                   {}});
  return AlgebraHom(std::move(impl));
}

AlgebraHom AlgebraHom::to_tensor(SplitAlgebraHandle src, TensorAlgebraHandle dst, RingHom coeff,
                                 std::vector<TensorElement> roots) {
  check_coeff_endpoints(src, coeff, dst->base());
  for (const auto& r : roots)
    if (r.algebra().get() != dst.get())
      fail(Err::AlgebraMismatch, "root images must live in the target tensor algebra");
  verify_factorization(TensorOps{dst}, src->poly(), coeff, roots);
  auto impl = std::shared_ptr<const Impl>(new Impl{Target::Tensor, src, std::move(coeff), nullptr,
                                                   nullptr, std::move(dst), {}, {},
                                                   std::move(roots)});
  return AlgebraHom(std::move(impl));
}

AlgebraHom::Target AlgebraHom::target() const { return impl_->kind; }
const SplitAlgebraHandle& AlgebraHom::source() const { return impl_->src; }
const RingHom& AlgebraHom::coefficient_map() const { return impl_->coeff; }

const RingHandle& AlgebraHom::ring_target() const {
  check_internal(impl_->kind == Target::Ring, "homomorphism target is not a plain ring");
  return impl_->ring_dst;
}
const SplitAlgebraHandle& AlgebraHom::split_target() const {
  check_internal(impl_->kind == Target::Split, "homomorphism target is not a splitting algebra");
  return impl_->split_dst;
}
const TensorAlgebraHandle& AlgebraHom::tensor_target() const {
  check_internal(impl_->kind == Target::Tensor, "homomorphism target is not a tensor algebra");
  return impl_->tensor_dst;
}

RingElem AlgebraHom::map_to_ring(const SplitElement& x) const {
  if (x.algebra().get() != impl_->src.get())
    fail(Err::AlgebraMismatch, "element does not live in the source algebra");
  return eval_at_roots(RingOps{ring_target()}, *impl_->src, x, impl_->coeff, impl_->r_roots);
}

SplitElement AlgebraHom::map_to_split(const SplitElement& x) const {
  if (x.algebra().get() != impl_->src.get())
    fail(Err::AlgebraMismatch, "element does not live in the source algebra");
  return eval_at_roots(SplitOps{split_target()}, *impl_->src, x, impl_->coeff, impl_->s_roots);
}

TensorElement AlgebraHom::map_to_tensor(const SplitElement& x) const {
  if (x.algebra().get() != impl_->src.get())
    fail(Err::AlgebraMismatch, "element does not live in the source algebra");
  return eval_at_roots(TensorOps{tensor_target()}, *impl_->src, x, impl_->coeff, impl_->t_roots);
}

// ---------------------------------------------------------------------------
// shuffles

std::vector<Shuffle> shuffles(const std::vector<int>& composition) {
  if (composition.empty()) fail(Err::EmptyBlock, "composition needs at least one part");
  int n = 0;
  for (int p : composition) {
    if (p < 1) fail(Err::EmptyBlock, "composition parts must be positive");
    n += p;
  }
  mpz_class expected;
  mpz_fac_ui(expected.get_mpz_t(), static_cast<unsigned long>(n));
  for (int p : composition) {
    mpz_class pf;
    mpz_fac_ui(pf.get_mpz_t(), static_cast<unsigned long>(p));
    expected /= pf;
  }
  if (expected > 1000000)
    fail(Err::SearchSpaceTooLarge, "composition admits " + expected.get_str() + " shuffles");

  std::vector<Shuffle> out;
  std::vector<int> img(static_cast<size_t>(n), 0);
  std::vector<int> offsets{0};
  for (int p : composition) offsets.push_back(offsets.back() + p);

  std::function<void(size_t, const std::vector<int>&)> by_block =
      [&](size_t j, const std::vector<int>& avail) {
        if (j == composition.size()) {
          out.push_back(Shuffle{composition, Perm{img}});
          return;
        }
        int k = composition[j];
        std::vector<size_t> pick(static_cast<size_t>(k));
        std::function<void(size_t, int)> choose = [&](size_t start, int got) {
          if (got == k) {
            std::vector<int> rest;
            std::vector<bool> taken(avail.size(), false);
            for (size_t t = 0; t < pick.size(); ++t) {
              img[static_cast<size_t>(offsets[j] + static_cast<int>(t))] = avail[pick[t]];
              taken[pick[t]] = true;
            }
            for (size_t t = 0; t < avail.size(); ++t)
              if (!taken[t]) rest.push_back(avail[t]);
            by_block(j + 1, rest);
            return;
          }
          for (size_t idx = start; idx + static_cast<size_t>(k - got) <= avail.size(); ++idx) {
            pick[static_cast<size_t>(got)] = idx;
            choose(idx + 1, got + 1);
          }
        };
        choose(0, 0);
      };
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  by_block(0, all);

  std::sort(out.begin(), out.end(),
            [](const Shuffle& a, const Shuffle& b) { return a.perm < b.perm; });
  check_internal(mpz_class(static_cast<unsigned long>(out.size())) == expected,
                 "shuffle enumeration missed cosets");
  return out;
}

// ---------------------------------------------------------------------------
// factor validation shared by the decompositions

namespace {

void validate_factors(const SplitAlgebraHandle& alg, const std::vector<MonicPoly>& gs,
                      const std::vector<BezoutCert>& certs) {
  const RingHandle& A = alg->base();
  if (gs.empty()) fail(Err::MalformedSpec, "need at least one factor");
  for (const auto& g : gs) {
    if (!same_ring(g.ring, A))
      fail(Err::RingMismatch, "factors must have coefficients in the algebra base ring");
    if (g.coeffs.size() < 2) fail(Err::EmptyBlock, "factors must have positive degree");
  }
  uni::Dense prod = uni::constant(A, A->one());
  for (const auto& g : gs) prod = uni::mul(A, prod, g.coeffs);
  if (!uni::eq(A, prod, alg->poly().coeffs))
    fail(Err::ProductMismatch, "factors do not multiply to f");

  if (A->is_field()) {
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j) {
        uni::Dense d = uni::gcd(A, gs[i].coeffs, gs[j].coeffs);
        if (uni::deg(d) != 0)
          fail(Err::NotCoprime, "factors " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " share the common divisor " +
                                    uni::to_string(A, d, "t"));
      }
    return;
  }
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) {
      const BezoutCert* cert = nullptr;
      bool swapped = false;
      for (const auto& c : certs) {
        if (c.i == i && c.j == j) { cert = &c; swapped = false; }
        if (c.i == j && c.j == i) { cert = &c; swapped = true; }
      }
      if (!cert)
        fail(Err::NotCoprime, "no Bezout certificate for factors " + std::to_string(i + 1) +
                                  " and " + std::to_string(j + 1) +
                                  " over a base that is not a field");
      const auto& u = swapped ? cert->v : cert->u;
      const auto& v = swapped ? cert->u : cert->v;
      uni::Dense s = uni::add(A, uni::mul(A, u, gs[i].coeffs), uni::mul(A, v, gs[j].coeffs));
      if (!uni::eq(A, s, uni::constant(A, A->one())))
        fail(Err::NotCoprime, "Bezout certificate for factors " + std::to_string(i + 1) +
                                  " and " + std::to_string(j + 1) + " does not combine to 1");
    }
}

std::vector<RingElem> flatten_over_base(const RingHandle& A, const RingHandle& ext,
                                        const RingElem& c, size_t d) {
  if (ext.get() == A.get()) return {c};
  uni::Dense dense = detail::payload_to_dense(*ext, c);
  dense.resize(d, A->zero());
  return dense;
}

}  // namespace

// ---------------------------------------------------------------------------
// root adjunction split

CrtSplit crt_split(const SplitAlgebraHandle& alg, const std::vector<MonicPoly>& factors,
                   const std::vector<BezoutCert>& certs) {
  const RingHandle& A = alg->base();
  const int n = alg->degree();
  if (n < 1) fail(Err::MalformedSpec, "nothing to split in a degree zero algebra");
  validate_factors(alg, factors, certs);

  CrtSplit out{{}, make_matrix(A, alg->basis_size(), alg->basis_size()), A->zero(), false};
  std::vector<size_t> row_base;
  size_t rows = 0;
  for (const auto& g : factors) {
    int d = static_cast<int>(g.coeffs.size()) - 1;
    RingHandle ext;
    RingElem ups = A->zero();
    RingHom coeff = RingHom::identity(A);
    if (d == 1) {
      ext = A;
      ups = A->neg(g.coeffs[0]);
    } else {
      if (!A->is_field())
        fail(Err::UnsupportedBaseRing,
             "factors of degree 2 or more need field coefficients to adjoin a root");
      RingHandle P = Ring::poly_ring(A, {fresh_var(A, "y")});
      ext = Ring::quotient_ring(P, detail::polyring_from_dense(P, g.coeffs));
      ups = ext->generator();
      coeff = RingHom::inclusion(A, ext);
    }
    std::vector<RingElem> fc;
    fc.reserve(alg->poly().coeffs.size());
    for (const auto& c : alg->poly().coeffs) fc.push_back(coeff(c));
    SyntheticDiv sd = synthetic_divide(make_monic(ext, std::move(fc)), ups);
    check_internal(ext->is_zero(sd.remainder), "adjoined root fails to divide f");
    SplitAlgebraHandle sub = SplitAlgebra::create(sd.quotient);
    std::vector<SplitElement> roots;
    for (int k = 1; k < n; ++k) roots.push_back(sub->root(k));
    roots.push_back(sub->from_base(ups));
    AlgebraHom proj = AlgebraHom::to_split(alg, sub, coeff, std::move(roots));
    row_base.push_back(rows);
    rows += static_cast<size_t>(d) * sub->basis_size();
    out.components.push_back(CrtComponent{g, ext, ups, sd.quotient, sub, std::move(proj)});
  }
  check_internal(rows == alg->basis_size(), "component ranks do not add up");

  for (size_t col = 0; col < alg->basis_size(); ++col) {
    SplitElement x = alg->monomial(alg->basis_exponents()[col], A->one());
    for (size_t i = 0; i < out.components.size(); ++i) {
      const CrtComponent& comp = out.components[i];
      size_t d = comp.g.coeffs.size() - 1;
      SplitElement y = comp.projection.map_to_split(x);
      std::vector<RingElem> coords = comp.algebra->coordinates(y);
      for (size_t r = 0; r < coords.size(); ++r) {
        std::vector<RingElem> slots = flatten_over_base(A, comp.ext, coords[r], d);
        for (size_t s = 0; s < slots.size(); ++s)
          out.matrix.at(row_base[i] + r * d + s, col) = slots[s];
      }
    }
  }
  out.det = det_exact(out.matrix);
  if (!A->is_unit(out.det))
    fail(Err::NonInvertibleResult, "combined projection matrix has non-unit determinant " +
                                       A->to_string(out.det));
  out.verified = true;
  return out;
}

// ---------------------------------------------------------------------------
// shuffle decomposition

ShuffleDecomposition shuffle_decomposition(const SplitAlgebraHandle& alg,
                                           const std::vector<MonicPoly>& factors,
                                           const std::vector<BezoutCert>& certs) {
  const RingHandle& A = alg->base();
  validate_factors(alg, factors, certs);

  std::vector<SplitAlgebraHandle> legs;
  std::vector<int> composition;
  for (const auto& g : factors) {
    legs.push_back(SplitAlgebra::create(g));
    composition.push_back(static_cast<int>(g.coeffs.size()) - 1);
  }
  TensorAlgebraHandle T = TensorAlgebra::create(legs);

  ShuffleDecomposition out{shuffles(composition), T, {},
                           make_matrix(A, alg->basis_size(), alg->basis_size()), A->zero(),
                           false};
  check_internal(out.sigma.size() * T->rank() == alg->basis_size(),
                 "shuffle count times tensor rank must equal the algebra rank");

  std::vector<int> block_start{0};
  for (int p : composition) block_start.push_back(block_start.back() + p);
  const int n = alg->degree();
  for (const Shuffle& sh : out.sigma) {
    // tau_{sigma(p_{j-1}+k)} receives root k of factor j; the receiving
    // indices are increasing within each block, so the maps are in bijection
    // with the ordered partitions of {1..n} into the block sizes.  The other
    // index reading collapses maps that differ by a factor automorphism and
    // makes the combined matrix singular.
    std::vector<TensorElement> roots(static_cast<size_t>(n), T->zero());
    for (size_t j = 0; j < composition.size(); ++j)
      for (int k = 1; k <= composition[j]; ++k) {
        int i = sh.perm(block_start[j] + k);
        roots[static_cast<size_t>(i - 1)] = T->root_image(k, j);
      }
    out.maps.push_back(AlgebraHom::to_tensor(alg, T, RingHom::identity(A), std::move(roots)));
  }

  for (size_t col = 0; col < alg->basis_size(); ++col) {
    SplitElement x = alg->monomial(alg->basis_exponents()[col], A->one());
    for (size_t s = 0; s < out.maps.size(); ++s) {
      std::vector<RingElem> coords = T->coordinates(out.maps[s].map_to_tensor(x));
      for (size_t r = 0; r < coords.size(); ++r) out.matrix.at(s * T->rank() + r, col) = coords[r];
    }
  }
  out.det = det_exact(out.matrix);
  if (!A->is_unit(out.det))
    fail(Err::NonInvertibleResult,
         "combined shuffle map matrix has non-unit determinant " + A->to_string(out.det));
  out.invertible = true;
  return out;
}

// ---------------------------------------------------------------------------
// idempotents over finite fields

namespace {

std::vector<MonicPoly> sorted_irreducible_factors(const RingHandle& K, const uni::Dense& f,
                                                  bool expect_separable) {
  std::vector<MonicPoly> out;
  for (const auto& fac : factor_finite_field(K, f)) {
    if (expect_separable)
      check_internal(fac.multiplicity == 1, "separable polynomial grew a repeated factor");
    for (int m = 0; m < fac.multiplicity; ++m) out.push_back(make_monic(K, fac.poly));
  }
  std::sort(out.begin(), out.end(), [&](const MonicPoly& a, const MonicPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
    for (size_t k = a.coeffs.size(); k-- > 0;) {
      int c = K->cmp(a.coeffs[k], b.coeffs[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

std::vector<SplitElement> idempotents_rec(const SplitAlgebraHandle& B) {
  if (B->degree() <= 1) return {B->one()};
  const RingHandle& K = B->base();
  std::vector<MonicPoly> facs = sorted_irreducible_factors(K, B->poly().coeffs, true);
  CrtSplit crt = crt_split(B, facs);
  std::vector<SplitElement> out;
  size_t total = B->basis_size();
  std::vector<size_t> row_base;
  size_t rows = 0;
  for (const auto& comp : crt.components) {
    row_base.push_back(rows);
    rows += (comp.g.coeffs.size() - 1) * comp.algebra->basis_size();
  }
  for (size_t i = 0; i < crt.components.size(); ++i) {
    const CrtComponent& comp = crt.components[i];
    size_t d = comp.g.coeffs.size() - 1;
    for (const SplitElement& eu : idempotents_rec(comp.algebra)) {
      std::vector<RingElem> target(total, K->zero());
      std::vector<RingElem> coords = comp.algebra->coordinates(eu);
      for (size_t r = 0; r < coords.size(); ++r) {
        std::vector<RingElem> slots = flatten_over_base(K, comp.ext, coords[r], d);
        for (size_t s = 0; s < slots.size(); ++s) target[row_base[i] + r * d + s] = slots[s];
      }
      auto x = field_solve(crt.matrix, target);
      check_internal(x.has_value(), "component unit has no preimage under the split");
      out.push_back(B->from_coordinates(*x));
    }
  }
  return out;
}

}  // namespace

std::vector<SplitElement> primitive_idempotents(const SplitAlgebraHandle& alg) {
  const RingHandle& K = alg->base();
  if (!K->is_field() || !K->cardinality())
    fail(Err::NotFiniteField, "idempotent decomposition needs a finite field base");
  if (!is_separable_poly(K, alg->poly().coeffs))
    fail(Err::NotSeparable, "f has repeated roots: gcd(f, f') is nonconstant");

  std::vector<SplitElement> idems = idempotents_rec(alg);
  SplitElement sum = alg->zero();
  for (const auto& e : idems) sum = alg->add(sum, e);
  check_internal(alg->eq(sum, alg->one()), "idempotents do not sum to 1");
  for (size_t i = 0; i < idems.size(); ++i) {
    check_internal(alg->eq(alg->mul(idems[i], idems[i]), idems[i]),
                   "component unit is not idempotent");
    for (size_t j = i + 1; j < idems.size(); ++j)
      check_internal(alg->is_zero(alg->mul(idems[i], idems[j])),
                     "component units are not orthogonal");
  }
  return idems;
}

// ---------------------------------------------------------------------------
// maximal ideals and the symmetric action on them

namespace {

struct IdealEntry {
  std::string key;
  Matrix rref;                   // basis of the kernel, canonical rows
  std::vector<size_t> arrangement;
  Matrix eval;                   // the evaluation map for one defining arrangement
};

struct IdealData {
  RingHandle L;
  int l0 = 1;
  std::vector<RingElem> roots;
  std::vector<int> mult;
  std::vector<IdealEntry> ideals;
};

std::string matrix_key(const Matrix& m) {
  std::string s;
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) {
      s += m.ring->to_string(m.at(i, j));
      s += ',';
    }
    s += ';';
  }
  return s;
}

// Canonical form of the row space: reduced echelon rows, zero rows dropped.
Matrix canonical_rows(Matrix m) {
  std::vector<size_t> piv = rref_in_place(m);
  Matrix out = make_matrix(m.ring, piv.size(), m.cols);
  for (size_t i = 0; i < piv.size(); ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

bool in_row_space(const Matrix& rref, std::vector<RingElem> v) {
  const RingHandle& K = rref.ring;
  for (size_t i = 0; i < rref.rows; ++i) {
    size_t p = 0;
    while (p < rref.cols && K->is_zero(rref.at(i, p))) ++p;
    if (p == rref.cols) continue;
    if (K->is_zero(v[p])) continue;
    RingElem c = K->mul(v[p], K->inv(rref.at(i, p)));
    for (size_t j = 0; j < rref.cols; ++j) v[j] = K->sub(v[j], K->mul(c, rref.at(i, j)));
  }
  for (const auto& c : v)
    if (!K->is_zero(c)) return false;
  return true;
}

IdealData build_ideal_data(const SplitAlgebraHandle& alg) {
  const RingHandle& K = alg->base();
  if (!K->is_field() || !K->cardinality())
    fail(Err::NotFiniteField, "maximal ideal enumeration needs a finite field base");
  const int n = alg->degree();
  const size_t N = alg->basis_size();

  IdealData data;
  std::vector<MonicPoly> facs;
  std::set<std::string> seen_fac;
  int l0 = 1;
  if (n > 0) {
    for (const auto& g : sorted_irreducible_factors(K, alg->poly().coeffs, false)) {
      std::string key = matrix_key(Matrix{K, 1, g.coeffs.size(), g.coeffs});
      if (seen_fac.insert(key).second) facs.push_back(g);
      l0 = std::lcm(l0, static_cast<int>(g.coeffs.size()) - 1);
    }
  }
  data.l0 = l0;
  if (l0 == 1) {
    data.L = K;
  } else {
    RingHandle P = Ring::poly_ring(K, {fresh_var(K, "y")});
    data.L = Ring::quotient_ring(P, detail::polyring_from_dense(P, uni::least_irreducible(K, l0)));
  }

  // Roots of f in L with their multiplicities in f.
  std::vector<int> fac_mult;
  for (const auto& g : facs) {
    int m = 0;
    uni::Dense rem = alg->poly().coeffs;
    while (uni::deg(rem) >= uni::deg(g.coeffs)) {
      auto dr = uni::divrem(K, rem, g.coeffs);
      if (!uni::is_zero(dr.rem)) break;
      ++m;
      rem = dr.quot;
    }
    fac_mult.push_back(m);
  }
  std::optional<RingHom> into_L;
  if (data.L.get() != K.get()) into_L = RingHom::inclusion(K, data.L);
  for (size_t t = 0; t < facs.size(); ++t) {
    uni::Dense gl;
    for (const auto& c : facs[t].coeffs) gl.push_back(into_L ? (*into_L)(c) : c);
    auto rts = field_roots(data.L, gl);
    check_internal(rts.size() == facs[t].coeffs.size() - 1,
                   "irreducible factor does not split in the splitting field");
    for (const auto& [r, m] : rts) {
      check_internal(m == 1, "irreducible factor over a finite field must be separable");
      data.roots.push_back(r);
      data.mult.push_back(fac_mult[t]);
    }
  }
  int root_total = 0;
  for (size_t t = 0; t < data.mult.size(); ++t) root_total += data.mult[t];
  check_internal(root_total == n, "root multiplicities do not add up to the degree");

  // Arrangements: all distinct sequences using root j exactly mult[j] times.
  std::vector<size_t> seq;
  for (size_t j = 0; j < data.roots.size(); ++j)
    for (int m = 0; m < data.mult[j]; ++m) seq.push_back(j);

  std::vector<std::vector<RingElem>> powtab(data.roots.size());
  auto root_pow = [&](size_t j, int e) -> const RingElem& {
    auto& tab = powtab[j];
    if (tab.empty()) tab.push_back(data.L->one());
    while (static_cast<int>(tab.size()) <= e)
      tab.push_back(data.L->mul(tab.back(), data.roots[j]));
    return tab[static_cast<size_t>(e)];
  };

  std::set<std::string> seen;
  do {
    Matrix M = make_matrix(K, static_cast<size_t>(l0), N);
    for (size_t col = 0; col < N; ++col) {
      const auto& key = alg->basis_exponents()[col];
      RingElem val = data.L->one();
      for (size_t s = 0; s < key.size(); ++s)
        if (key[s] > 0) val = data.L->mul(val, root_pow(seq[s + 1], key[s]));
      std::vector<RingElem> slots =
          flatten_over_base(K, data.L, val, static_cast<size_t>(l0));
      for (size_t r = 0; r < slots.size(); ++r) M.at(r, col) = slots[r];
    }
    Matrix ker = field_kernel(M);
    check_internal(ker.cols == N - static_cast<size_t>(l0),
                   "root evaluation is not surjective onto the splitting field");
    Matrix G = make_matrix(K, ker.cols, N);
    for (size_t r = 0; r < ker.cols; ++r)
      for (size_t c = 0; c < N; ++c) G.at(r, c) = ker.at(c, r);
    G = canonical_rows(std::move(G));
    std::string key = matrix_key(G);
    if (seen.insert(key).second)
      data.ideals.push_back(IdealEntry{key, std::move(G), seq, std::move(M)});
  } while (std::next_permutation(seq.begin(), seq.end()));

  std::sort(data.ideals.begin(), data.ideals.end(),
            [](const IdealEntry& a, const IdealEntry& b) { return a.key < b.key; });
  return data;
}

// Canonical form of the image of an ideal under the permutation action.
std::string permuted_ideal_key(const SplitAlgebraHandle& alg, const IdealEntry& I,
                               const Perm& s) {
  const RingHandle& K = alg->base();
  Matrix rows = make_matrix(K, I.rref.rows, I.rref.cols);
  for (size_t r = 0; r < I.rref.rows; ++r) {
    std::vector<RingElem> v(I.rref.a.begin() + static_cast<long>(r * I.rref.cols),
                            I.rref.a.begin() + static_cast<long>((r + 1) * I.rref.cols));
    SplitElement y = apply_permutation(s, alg->from_coordinates(v));
    std::vector<RingElem> w = alg->coordinates(y);
    for (size_t c = 0; c < I.rref.cols; ++c) rows.at(r, c) = w[c];
  }
  return matrix_key(canonical_rows(std::move(rows)));
}

}  // namespace

std::vector<MaximalIdealDesc> maximal_ideals(const SplitAlgebraHandle& alg) {
  IdealData data = build_ideal_data(alg);
  const RingHandle& K = alg->base();
  const int n = alg->degree();
  std::vector<MaximalIdealDesc> out;
  for (const IdealEntry& I : data.ideals) {
    MaximalIdealDesc desc;
    desc.algebra = alg;
    desc.residue_degree = data.l0;
    for (size_t r = 0; r < I.rref.rows; ++r) {
      std::vector<RingElem> v(I.rref.a.begin() + static_cast<long>(r * I.rref.cols),
                              I.rref.a.begin() + static_cast<long>((r + 1) * I.rref.cols));
      desc.kernel_basis.push_back(alg->from_coordinates(v));
    }
    for (const SplitElement& x : desc.kernel_basis)
      for (int k = 2; k <= n; ++k) {
        SplitElement y = alg->mul(alg->root(k), x);
        check_internal(in_row_space(I.rref, alg->coordinates(y)),
                       "kernel is not closed under multiplication by the roots");
      }
    (void)K;
    out.push_back(std::move(desc));
  }
  return out;
}

GaloisReport galois_group(const MonicPoly& f) {
  const RingHandle& K = f.ring;
  if (!K->is_field() || !K->cardinality())
    fail(Err::NotFiniteField, "Galois computation needs a finite field base");
  if (!is_separable_poly(K, f.coeffs))
    fail(Err::NotSeparable, "f has repeated roots: gcd(f, f') is nonconstant");
  SplitAlgebraHandle alg = SplitAlgebra::create(f);
  IdealData data = build_ideal_data(alg);
  const IdealEntry& I0 = data.ideals.front();
  const int n = alg->degree();

  GaloisReport rep;
  rep.residue_degree = data.l0;
  rep.ideal_count = data.ideals.size();
  for (const Perm& s : all_permutations(n))
    if (permuted_ideal_key(alg, I0, s) == I0.key) rep.elements.push_back(s);
  rep.group_order = static_cast<int>(rep.elements.size());
  rep.order_matches_degree = (rep.group_order == data.l0);

  std::set<std::vector<int>> members;
  for (const Perm& s : rep.elements) members.insert(s.img);
  rep.closed_under_ops = true;
  for (const Perm& a : rep.elements) {
    if (!members.count(a.inverse().img)) rep.closed_under_ops = false;
    for (const Perm& b : rep.elements)
      if (!members.count(compose(a, b).img)) rep.closed_under_ops = false;
  }

  mpz_class nf;
  mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n));
  rep.orbit_stabilizer_ok = false;
  {
    mpz_class arr = nf;
    for (int m : data.mult) {
      mpz_class mf;
      mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(m));
      arr /= mf;
    }
    rep.orbit_stabilizer_ok =
        (mpz_class(static_cast<unsigned long>(rep.group_order)) *
             static_cast<unsigned long>(rep.ideal_count) ==
         arr);
  }

  // Greedy generating subset: extend whenever an element is not yet generated.
  auto closure_of = [&](const std::vector<Perm>& gens) {
    std::set<std::vector<int>> cl{Perm::identity(n).img};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<int>> cur(cl.begin(), cl.end());
      for (const auto& a : cur)
        for (const Perm& g : gens) {
          Perm p = compose(Perm{a}, g);
          if (cl.insert(p.img).second) grew = true;
        }
    }
    return cl;
  };
  for (const Perm& s : rep.elements) {
    if (s.is_identity()) continue;
    if (closure_of(rep.generators).count(s.img)) continue;
    rep.generators.push_back(s);
  }

  if (data.l0 == 1) {
    rep.fixed_field_is_base = true;
  } else {
    RingElem lambda = data.L->generator();
    auto x0 = field_solve(I0.eval, flatten_over_base(K, data.L, lambda,
                                                     static_cast<size_t>(data.l0)));
    check_internal(x0.has_value(), "splitting field generator has no preimage");
    SplitElement e0 = alg->from_coordinates(*x0);

    Matrix stacked = make_matrix(K, rep.elements.size() * static_cast<size_t>(data.l0),
                                 static_cast<size_t>(data.l0));
    for (size_t t = 0; t < rep.elements.size(); ++t) {
      std::vector<RingElem> c = alg->coordinates(apply_permutation(rep.elements[t], e0));
      uni::Dense wd(static_cast<size_t>(data.l0), K->zero());
      for (size_t r = 0; r < wd.size(); ++r)
        for (size_t j = 0; j < I0.eval.cols; ++j)
          wd[r] = K->add(wd[r], K->mul(I0.eval.at(r, j), c[j]));
      RingElem w = detail::quot_from_dense(data.L, wd);
      for (int k = 0; k < data.l0; ++k) {
        std::vector<RingElem> col = flatten_over_base(
            K, data.L, data.L->pow(w, mpz_class(k)), static_cast<size_t>(data.l0));
        for (int r = 0; r < data.l0; ++r) {
          RingElem v = col[static_cast<size_t>(r)];
          if (r == k) v = K->sub(v, K->one());
          stacked.at(t * static_cast<size_t>(data.l0) + static_cast<size_t>(r),
                     static_cast<size_t>(k)) = v;
        }
      }
    }
    Matrix ker = field_kernel(stacked);
    bool ok = (ker.cols == 1) && !K->is_zero(ker.at(0, 0));
    for (int r = 1; r < data.l0 && ok; ++r)
      if (!K->is_zero(ker.at(static_cast<size_t>(r), 0))) ok = false;
    rep.fixed_field_is_base = ok;
  }
  return rep;
}

TransitivityReport transitivity_check(const SplitAlgebraHandle& alg) {
  const int n = alg->degree();
  if (n > 5)
    fail(Err::SearchSpaceTooLarge,
         "transitivity search enumerates all of S_n; degree " + std::to_string(n) +
             " exceeds 5");
  IdealData data = build_ideal_data(alg);
  std::set<std::string> known;
  for (const IdealEntry& I : data.ideals) known.insert(I.key);
  std::set<std::string> orbit;
  for (const Perm& s : all_permutations(n)) {
    std::string key = permuted_ideal_key(alg, data.ideals.front(), s);
    check_internal(known.count(key) > 0, "permutation action left the ideal family");
    orbit.insert(key);
  }
  TransitivityReport rep;
  rep.ideal_count = data.ideals.size();
  rep.orbit_size = orbit.size();
  rep.transitive = (orbit.size() == data.ideals.size());
  return rep;
}

// ---------------------------------------------------------------------------
// inseparable example

InseparableDemoReport inseparable_demo() {
  RingHandle F3 = Ring::prime_field(3);
  RingHandle P = Ring::poly_ring(F3, {"s"});
  RingHandle K = Ring::fraction_field(P);
  RingElem s = K->var_table().at("s");
  MonicPoly f = make_monic(K, {K->neg(s), K->zero(), K->zero(), K->one()});

  InseparableDemoReport rep;
  rep.algebra = SplitAlgebra::create(f);
  const SplitAlgebraHandle& A = rep.algebra;

  std::vector<SplitElement> diffs;
  rep.squares_vanish = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      SplitElement d = A->sub(A->root(i), A->root(j));
      diffs.push_back(d);
      if (!A->is_zero(A->mul(d, d))) rep.squares_vanish = false;
    }

  // The ideal generated by the root differences, as a K-subspace.
  size_t N = A->basis_size();
  Matrix span = make_matrix(K, diffs.size() * N, N);
  size_t row = 0;
  for (const SplitElement& d : diffs)
    for (size_t b = 0; b < N; ++b) {
      SplitElement m = A->mul(d, A->monomial(A->basis_exponents()[b], K->one()));
      std::vector<RingElem> v = A->coordinates(m);
      for (size_t c = 0; c < N; ++c) span.at(row, c) = v[c];
      ++row;
    }
  Matrix G = canonical_rows(std::move(span));

  rep.ideal_stable = true;
  rep.residue_action_trivial = true;
  for (const Perm& sg : all_permutations(3)) {
    for (size_t r = 0; r < G.rows; ++r) {
      std::vector<RingElem> v(G.a.begin() + static_cast<long>(r * G.cols),
                              G.a.begin() + static_cast<long>((r + 1) * G.cols));
      SplitElement y = apply_permutation(sg, A->from_coordinates(v));
      if (!in_row_space(G, A->coordinates(y))) rep.ideal_stable = false;
    }
    for (int i = 1; i <= 3; ++i) {
      SplitElement d = A->sub(apply_permutation(sg, A->root(i)), A->root(i));
      if (!in_row_space(G, A->coordinates(d))) rep.residue_action_trivial = false;
    }
  }

  rep.invariants_trivial = (invariant_module(rep.algebra).generators.size() == 1);
  rep.all_ok = rep.squares_vanish && rep.ideal_stable && rep.residue_action_trivial &&
               rep.invariants_trivial;
  return rep;
}

}  // namespace splitalg
