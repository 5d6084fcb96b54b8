#include "splitalg/ring.hpp"

#include <algorithm>
#include <set>

#include "ring_detail.hpp"
#include "splitalg/univar.hpp"

namespace splitalg {

// ---- RingElem basics --------------------------------------------------------

const MultiPoly& RingElem::as_poly() const {
  return *std::get<std::shared_ptr<const MultiPoly>>(payload_);
}
const FracPayload& RingElem::as_frac() const {
  return *std::get<std::shared_ptr<const FracPayload>>(payload_);
}
const ProdPayload& RingElem::as_prod() const {
  return *std::get<std::shared_ptr<const ProdPayload>>(payload_);
}

RingElem RingElem::operator+(const RingElem& o) const { return owner_->add(*this, o); }
RingElem RingElem::operator-(const RingElem& o) const { return owner_->sub(*this, o); }
RingElem RingElem::operator*(const RingElem& o) const { return owner_->mul(*this, o); }
RingElem RingElem::operator-() const { return owner_->neg(*this); }
bool RingElem::operator==(const RingElem& o) const { return owner_->eq(*this, o); }
bool RingElem::is_zero() const { return owner_->is_zero(*this); }
bool RingElem::is_one() const { return owner_->is_one(*this); }
std::string RingElem::str() const { return owner_->to_string(*this); }

bool same_ring(const RingHandle& a, const RingHandle& b) {
  return a.get() == b.get() || a->same(*b);
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  check_internal(a.valid() && b.valid(), "uninitialized element");
  if (!same_ring(a.owner(), b.owner()))
    fail(Err::ElementRingMismatch, "operands live in different rings (" +
                                       a.owner()->spec_string() + " vs " +
                                       b.owner()->spec_string() + ")");
}

// ---- detail helpers ---------------------------------------------------------

namespace detail {

bool is_quot_like(const Ring& r) {
  return r.kind() == RingKind::QuotientRing || r.kind() == RingKind::FiniteField;
}

const RingHandle& payload_coeff_ring(const Ring& r) {
  if (r.kind() == RingKind::PolyRing) return r.base();
  check_internal(is_quot_like(r), "no polynomial payload for this ring kind");
  return r.inner_poly()->base();
}

size_t exp_width(const Ring& r) {
  if (r.kind() == RingKind::PolyRing) return r.vars().size();
  check_internal(is_quot_like(r), "no polynomial payload for this ring kind");
  return 1;
}

RingElem make_poly_elem(const RingHandle& owner, const RingHandle& coeffR,
                        MultiPoly::Terms t) {
  for (auto it = t.begin(); it != t.end();)
    it = coeffR->is_zero(it->second) ? t.erase(it) : std::next(it);
  auto mp = std::make_shared<MultiPoly>();
  mp->terms = std::move(t);
  return RingElem(owner, RingElem::Payload(std::move(mp)));
}

MultiPoly::Terms terms_add(const RingHandle& coeffR, const MultiPoly::Terms& a,
                           const MultiPoly::Terms& b, bool subtract) {
  MultiPoly::Terms out = a;
  for (const auto& [mono, c] : b) {
    RingElem v = subtract ? coeffR->neg(c) : c;
    auto it = out.find(mono);
    if (it == out.end()) {
      out.emplace(mono, v);
    } else {
      it->second = coeffR->add(it->second, v);
      if (coeffR->is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

MultiPoly::Terms terms_neg(const RingHandle& coeffR, const MultiPoly::Terms& a) {
  MultiPoly::Terms out = a;
  for (auto& [mono, c] : out) c = coeffR->neg(c);
  return out;
}

MultiPoly::Terms terms_mul(const RingHandle& coeffR, const MultiPoly::Terms& a,
                           const MultiPoly::Terms& b) {
  MultiPoly::Terms out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> mono(ma.size());
      for (size_t i = 0; i < mono.size(); ++i) mono[i] = ma[i] + mb[i];
      RingElem prod = coeffR->mul(ca, cb);
      if (coeffR->is_zero(prod)) continue;
      auto it = out.find(mono);
      if (it == out.end()) {
        out.emplace(std::move(mono), std::move(prod));
      } else {
        it->second = coeffR->add(it->second, prod);
        if (coeffR->is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

uni::Dense payload_to_dense(const Ring& owner, const RingElem& x) {
  const RingHandle& K = payload_coeff_ring(owner);
  uni::Dense out;
  for (const auto& [mono, c] : x.as_poly().terms) {
    size_t d = static_cast<size_t>(mono[0]);
    if (out.size() <= d) out.resize(d + 1, K->zero());
    out[d] = c;
  }
  return uni::trim(K, std::move(out));
}

uni::Dense polyring_to_dense(const Ring& P, const RingElem& x) {
  return payload_to_dense(P, x);
}

RingElem polyring_from_dense(const RingHandle& P, const uni::Dense& c) {
  MultiPoly::Terms t;
  for (size_t i = 0; i < c.size(); ++i) {
    if (P->base()->is_zero(c[i])) continue;
    t.emplace(std::vector<int>{static_cast<int>(i)}, c[i]);
  }
  return make_poly_elem(P, P->base(), std::move(t));
}

RingElem quot_from_dense(const RingHandle& owner, uni::Dense rep) {
  const RingHandle& K = payload_coeff_ring(*owner);
  rep = uni::divrem(K, rep, owner->modulus_dense()).rem;
  MultiPoly::Terms t;
  for (size_t i = 0; i < rep.size(); ++i) {
    if (K->is_zero(rep[i])) continue;
    t.emplace(std::vector<int>{static_cast<int>(i)}, rep[i]);
  }
  return make_poly_elem(owner, K, std::move(t));
}

RingElem make_frac(const RingHandle& owner, RingElem num, RingElem den) {
  const RingHandle& P = owner->inner_poly();
  const RingHandle& K = P->base();
  uni::Dense n = polyring_to_dense(*P, num);
  uni::Dense d = polyring_to_dense(*P, den);
  check_internal(!uni::is_zero(d), "fraction with zero denominator");
  if (uni::is_zero(n)) {
    auto fp = std::make_shared<FracPayload>(FracPayload{P->zero(), P->one()});
    return RingElem(owner, RingElem::Payload(std::move(fp)));
  }
  uni::Dense g = uni::gcd(K, n, d);
  if (uni::deg(g) > 0) {
    n = uni::div_exact(K, n, g);
    d = uni::div_exact(K, d, g);
  }
  if (!K->is_one(d.back())) {
    RingElem c = K->inv(d.back());
    n = uni::scale(K, c, n);
    d = uni::scale(K, c, d);
  }
  auto fp = std::make_shared<FracPayload>(
      FracPayload{polyring_from_dense(P, n), polyring_from_dense(P, d)});
  return RingElem(owner, RingElem::Payload(std::move(fp)));
}

}  // namespace detail

using detail::is_quot_like;
using detail::make_poly_elem;
using detail::payload_coeff_ring;

// ---- kind accessors ---------------------------------------------------------

void Ring::require_kind(RingKind k) const {
  check_internal(kind_ == k, "ring accessor used on the wrong kind");
}

const mpz_class& Ring::modulus_int() const {
  check_internal(kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField ||
                     kind_ == RingKind::FiniteField,
                 "no integer modulus for this ring kind");
  return mod_int_;
}

int Ring::ff_degree() const {
  require_kind(RingKind::FiniteField);
  return ff_degree_;
}

const RingHandle& Ring::base() const {
  require_kind(RingKind::PolyRing);
  return base_;
}

const std::vector<std::string>& Ring::vars() const {
  require_kind(RingKind::PolyRing);
  return vars_;
}

const RingHandle& Ring::inner_poly() const {
  check_internal(kind_ == RingKind::FractionField || is_quot_like(*this),
                 "no inner polynomial ring for this ring kind");
  return inner_poly_;
}

const RingElem& Ring::modulus_poly() const {
  check_internal(is_quot_like(*this), "no polynomial modulus for this ring kind");
  return *modulus_poly_;
}

const std::vector<RingElem>& Ring::modulus_dense() const {
  check_internal(is_quot_like(*this), "no polynomial modulus for this ring kind");
  return modulus_dense_;
}

const std::vector<RingHandle>& Ring::factors() const {
  require_kind(RingKind::Product);
  return factors_;
}

// ---- construction -----------------------------------------------------------

struct RingBuilder {
  static std::shared_ptr<Ring> fresh() { return std::shared_ptr<Ring>(new Ring()); }
  static Ring& mut(const std::shared_ptr<Ring>& r) { return *r; }
};

namespace {

bool probab_prime(const mpz_class& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

RingHandle Ring::integers() {
  static RingHandle h = [] {
    auto r = RingBuilder::fresh();
    r->kind_ = RingKind::Integers;
    r->domain_ = true;
    return RingHandle(r);
  }();
  return h;
}

RingHandle Ring::rationals() {
  static RingHandle h = [] {
    auto r = RingBuilder::fresh();
    r->kind_ = RingKind::Rationals;
    r->domain_ = true;
    r->field_ = true;
    return RingHandle(r);
  }();
  return h;
}

RingHandle Ring::integers_mod(const mpz_class& m) {
  if (m < 2) fail(Err::MalformedSpec, "Zmod modulus must be at least 2");
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::IntegersMod;
  r->mod_int_ = m;
  r->characteristic_ = m;
  r->cardinality_ = m;
  r->field_ = r->domain_ = probab_prime(m);
  return r;
}

RingHandle Ring::prime_field(const mpz_class& p) {
  if (!probab_prime(p))
    fail(Err::NonPrimeModulus, "Fp modulus " + p.get_str() + " is not prime");
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::PrimeField;
  r->mod_int_ = p;
  r->characteristic_ = p;
  r->cardinality_ = p;
  r->field_ = r->domain_ = true;
  return r;
}

RingHandle Ring::finite_field(const mpz_class& p, int k) {
  if (!probab_prime(p))
    fail(Err::NonPrimeModulus, "GF characteristic " + p.get_str() + " is not prime");
  if (k < 1) fail(Err::MalformedSpec, "GF extension degree must be at least 1");
  if (k == 1) return prime_field(p);
  RingHandle P = poly_ring(prime_field(p), {"x"});
  uni::Dense mod = uni::least_irreducible(P->base(), k);
  return finite_field(p, k, detail::polyring_from_dense(P, mod));
}

RingHandle Ring::finite_field(const mpz_class& p, int k, const RingElem& modulus) {
  if (!probab_prime(p))
    fail(Err::NonPrimeModulus, "GF characteristic " + p.get_str() + " is not prime");
  if (k < 2) fail(Err::MalformedSpec, "explicit-modulus GF needs degree >= 2");
  RingHandle P = modulus.owner();
  if (P->kind() != RingKind::PolyRing || P->vars().size() != 1 ||
      P->base()->kind() != RingKind::PrimeField || P->base()->modulus_int() != p)
    fail(Err::ElementRingMismatch, "GF modulus must live in F_p[x]");
  uni::Dense md = detail::polyring_to_dense(*P, modulus);
  if (uni::deg(md) != k || !P->base()->is_one(md.back()))
    fail(Err::NonMonicInput, "GF modulus must be monic of the declared degree");
  if (!uni::irreducible_mod(P->base(), md))
    fail(Err::ReducibleModulus, "GF modulus factors over F_p");
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::FiniteField;
  r->mod_int_ = p;
  r->ff_degree_ = k;
  r->inner_poly_ = P;
  r->modulus_poly_ = modulus;
  r->modulus_dense_ = md;
  r->characteristic_ = p;
  mpz_class card;
  mpz_pow_ui(card.get_mpz_t(), p.get_mpz_t(), k);
  r->cardinality_ = card;
  r->field_ = r->domain_ = true;
  return r;
}

RingHandle Ring::poly_ring(RingHandle base, std::vector<std::string> vars) {
  check_internal(base != nullptr, "polynomial ring needs a base");
  if (vars.empty()) fail(Err::MalformedSpec, "polynomial ring needs at least one variable");
  std::set<std::string> seen;
  auto inherited = base->var_table();
  for (const auto& v : vars) {
    if (!valid_identifier(v))
      fail(Err::MalformedSpec, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      fail(Err::MalformedSpec, "duplicate variable name '" + v + "'");
    if (inherited.count(v))
      fail(Err::MalformedSpec, "variable '" + v + "' already used by the base ring");
  }
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::PolyRing;
  r->base_ = std::move(base);
  r->vars_ = std::move(vars);
  r->characteristic_ = r->base_->characteristic();
  r->domain_ = r->base_->is_integral_domain();
  return r;
}

RingHandle Ring::fraction_field(RingHandle P) {
  check_internal(P != nullptr, "fraction field needs a base");
  if (P->kind() != RingKind::PolyRing || P->vars().size() != 1)
    fail(Err::UnsupportedBaseRing, "Frac needs a univariate polynomial ring");
  if (!P->base()->is_field())
    fail(Err::NotAField, "Frac needs polynomial coefficients in a field");
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::FractionField;
  r->inner_poly_ = std::move(P);
  r->characteristic_ = r->inner_poly_->characteristic();
  r->field_ = r->domain_ = true;
  return r;
}

RingHandle Ring::quotient_ring(RingHandle P, const RingElem& monic_modulus) {
  check_internal(P != nullptr, "quotient ring needs a base");
  if (P->kind() != RingKind::PolyRing || P->vars().size() != 1)
    fail(Err::UnsupportedBaseRing, "Quot needs a univariate polynomial ring");
  if (!P->base()->is_field())
    fail(Err::NotAField, "Quot needs polynomial coefficients in a field");
  if (!same_ring(monic_modulus.owner(), P))
    fail(Err::ElementRingMismatch, "Quot modulus must live in the declared polynomial ring");
  uni::Dense md = detail::polyring_to_dense(*P, monic_modulus);
  if (uni::deg(md) < 1) fail(Err::MalformedSpec, "Quot modulus must be nonconstant");
  if (!P->base()->is_one(md.back()))
    fail(Err::NonMonicInput, "Quot modulus must be monic");
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::QuotientRing;
  r->inner_poly_ = P;
  r->modulus_poly_ = monic_modulus;
  r->modulus_dense_ = md;
  r->characteristic_ = P->characteristic();
  const RingHandle& K = P->base();
  if (K->cardinality()) {
    mpz_class card;
    mpz_pow_ui(card.get_mpz_t(), K->cardinality()->get_mpz_t(), uni::deg(md));
    r->cardinality_ = card;
    r->field_ = r->domain_ = uni::irreducible_mod(K, md);
  }
  return r;
}

RingHandle Ring::product(std::vector<RingHandle> factors) {
  if (factors.empty()) fail(Err::MalformedSpec, "product ring needs at least one factor");
  auto r = RingBuilder::fresh();
  r->kind_ = RingKind::Product;
  r->factors_ = std::move(factors);
  mpz_class card = 1;
  bool finite = true;
  bool all_positive = true;
  for (const auto& f : r->factors_) {
    if (f->characteristic() == 0) all_positive = false;
    if (f->cardinality())
      card *= *f->cardinality();
    else
      finite = false;
  }
  // characteristic is the lcm when every factor has positive characteristic
  if (all_positive) {
    mpz_class ch = 1;
    for (const auto& f : r->factors_)
      mpz_lcm(ch.get_mpz_t(), ch.get_mpz_t(), f->characteristic().get_mpz_t());
    r->characteristic_ = ch;
  }
  if (finite) r->cardinality_ = card;
  if (r->factors_.size() == 1) {
    r->field_ = r->factors_[0]->is_field();
    r->domain_ = r->factors_[0]->is_integral_domain();
  }
  return r;
}

// ---- structural equality ------------------------------------------------------

bool Ring::same(const Ring& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return mod_int_ == o.mod_int_;
    case RingKind::FiniteField:
      return mod_int_ == o.mod_int_ && ff_degree_ == o.ff_degree_ &&
             inner_poly_->same(*o.inner_poly_) &&
             inner_poly_->eq(*modulus_poly_, *o.modulus_poly_);
    case RingKind::PolyRing:
      return vars_ == o.vars_ && base_->same(*o.base_);
    case RingKind::FractionField:
      return inner_poly_->same(*o.inner_poly_);
    case RingKind::QuotientRing:
      return inner_poly_->same(*o.inner_poly_) &&
             inner_poly_->eq(*modulus_poly_, *o.modulus_poly_);
    case RingKind::Product: {
      if (factors_.size() != o.factors_.size()) return false;
      for (size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->same(*o.factors_[i])) return false;
      return true;
    }
  }
  return false;
}

// ---- element construction -----------------------------------------------------

RingElem Ring::zero() const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(self, mpz_class(0));
    case RingKind::Rationals:
      return RingElem(self, mpq_class(0));
    case RingKind::PolyRing:
    case RingKind::QuotientRing:
    case RingKind::FiniteField:
      return make_poly_elem(self, payload_coeff_ring(*this), {});
    case RingKind::FractionField: {
      auto fp = std::make_shared<FracPayload>(
          FracPayload{inner_poly_->zero(), inner_poly_->one()});
      return RingElem(self, RingElem::Payload(std::move(fp)));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (const auto& f : factors_) parts.push_back(f->zero());
      auto pp = std::make_shared<ProdPayload>(ProdPayload{std::move(parts)});
      return RingElem(self, RingElem::Payload(std::move(pp)));
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(const mpz_class& z) const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers:
      return RingElem(self, z);
    case RingKind::Rationals:
      return RingElem(self, mpq_class(z));
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), z.get_mpz_t(), mod_int_.get_mpz_t());
      return RingElem(self, r);
    }
    case RingKind::PolyRing: {
      RingElem c = base_->from_int(z);
      MultiPoly::Terms t;
      if (!base_->is_zero(c)) t.emplace(std::vector<int>(vars_.size(), 0), c);
      return make_poly_elem(self, base_, std::move(t));
    }
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      RingElem c = K->from_int(z);
      MultiPoly::Terms t;
      if (!K->is_zero(c)) t.emplace(std::vector<int>{0}, c);
      return make_poly_elem(self, K, std::move(t));
    }
    case RingKind::FractionField: {
      auto fp = std::make_shared<FracPayload>(
          FracPayload{inner_poly_->from_int(z), inner_poly_->one()});
      return RingElem(self, RingElem::Payload(std::move(fp)));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (const auto& f : factors_) parts.push_back(f->from_int(z));
      auto pp = std::make_shared<ProdPayload>(ProdPayload{std::move(parts)});
      return RingElem(self, RingElem::Payload(std::move(pp)));
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

RingElem Ring::embed(const RingElem& x) const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::PolyRing: {
      if (!same_ring(x.owner(), base_))
        fail(Err::ElementRingMismatch, "embed expects an element of the coefficient ring");
      MultiPoly::Terms t;
      if (!base_->is_zero(x)) t.emplace(std::vector<int>(vars_.size(), 0), x);
      return make_poly_elem(self, base_, std::move(t));
    }
    case RingKind::FractionField: {
      if (same_ring(x.owner(), inner_poly_))
        return detail::make_frac(self, x, inner_poly_->one());
      if (same_ring(x.owner(), inner_poly_->base()))
        return detail::make_frac(self, inner_poly_->embed(x), inner_poly_->one());
      fail(Err::ElementRingMismatch, "embed expects an element of the inner polynomial ring");
    }
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      if (same_ring(x.owner(), inner_poly_))
        return detail::quot_from_dense(self, detail::polyring_to_dense(*inner_poly_, x));
      if (same_ring(x.owner(), inner_poly_->base())) {
        MultiPoly::Terms t;
        if (!inner_poly_->base()->is_zero(x)) t.emplace(std::vector<int>{0}, x);
        return make_poly_elem(self, inner_poly_->base(), std::move(t));
      }
      fail(Err::ElementRingMismatch, "embed expects an element of the inner polynomial ring");
    }
    default:
      fail(Err::UnsupportedBaseRing, "this ring kind has no canonical embedding");
  }
}

RingElem Ring::var_elem(const std::string& name) const {
  require_kind(RingKind::PolyRing);
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    fail(Err::MalformedSpec, "unknown variable '" + name + "'");
  MultiPoly::Terms t;
  std::vector<int> mono(vars_.size(), 0);
  mono[it - vars_.begin()] = 1;
  t.emplace(std::move(mono), base_->one());
  return make_poly_elem(shared_from_this(), base_, std::move(t));
}

RingElem Ring::generator() const {
  check_internal(is_quot_like(*this), "generator() needs a quotient-like ring");
  return embed(inner_poly_->var_elem(inner_poly_->vars()[0]));
}

RingElem Ring::tuple(std::vector<RingElem> parts) const {
  require_kind(RingKind::Product);
  if (parts.size() != factors_.size())
    fail(Err::ProductMismatch, "wrong number of components");
  for (size_t i = 0; i < parts.size(); ++i)
    if (!same_ring(parts[i].owner(), factors_[i]))
      fail(Err::ElementRingMismatch, "component in the wrong factor ring");
  auto pp = std::make_shared<ProdPayload>(ProdPayload{std::move(parts)});
  return RingElem(shared_from_this(), RingElem::Payload(std::move(pp)));
}

RingElem Ring::component(const RingElem& x, size_t i) const {
  require_kind(RingKind::Product);
  if (i >= factors_.size()) fail(Err::IndexOutOfRange, "no such product component");
  return x.as_prod().parts[i];
}

// ---- arithmetic ----------------------------------------------------------------

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  require_same_ring(a, b);
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers:
      return RingElem(self, mpz_class(a.as_int() + b.as_int()));
    case RingKind::Rationals:
      return RingElem(self, mpq_class(a.as_rat() + b.as_rat()));
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class r = a.as_int() + b.as_int();
      if (r >= mod_int_) r -= mod_int_;
      return RingElem(self, r);
    }
    case RingKind::PolyRing:
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      return make_poly_elem(self, K,
                            detail::terms_add(K, a.as_poly().terms, b.as_poly().terms, false));
    }
    case RingKind::FractionField: {
      const auto& fa = a.as_frac();
      const auto& fb = b.as_frac();
      RingElem num = inner_poly_->add(inner_poly_->mul(fa.num, fb.den),
                                      inner_poly_->mul(fb.num, fa.den));
      RingElem den = inner_poly_->mul(fa.den, fb.den);
      return detail::make_frac(self, std::move(num), std::move(den));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->add(a.as_prod().parts[i], b.as_prod().parts[i]));
      auto pp = std::make_shared<ProdPayload>(ProdPayload{std::move(parts)});
      return RingElem(self, RingElem::Payload(std::move(pp)));
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem Ring::neg(const RingElem& a) const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers:
      return RingElem(self, mpz_class(-a.as_int()));
    case RingKind::Rationals:
      return RingElem(self, mpq_class(-a.as_rat()));
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      if (a.as_int() == 0) return a;
      return RingElem(self, mpz_class(mod_int_ - a.as_int()));
    }
    case RingKind::PolyRing:
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      return make_poly_elem(self, K, detail::terms_neg(K, a.as_poly().terms));
    }
    case RingKind::FractionField: {
      const auto& fa = a.as_frac();
      auto fp = std::make_shared<FracPayload>(
          FracPayload{inner_poly_->neg(fa.num), fa.den});
      return RingElem(self, RingElem::Payload(std::move(fp)));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->neg(a.as_prod().parts[i]));
      auto pp = std::make_shared<ProdPayload>(ProdPayload{std::move(parts)});
      return RingElem(self, RingElem::Payload(std::move(pp)));
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  require_same_ring(a, b);
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers:
      return RingElem(self, mpz_class(a.as_int() * b.as_int()));
    case RingKind::Rationals:
      return RingElem(self, mpq_class(a.as_rat() * b.as_rat()));
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class r;
      mpz_class prod = a.as_int() * b.as_int();
      mpz_mod(r.get_mpz_t(), prod.get_mpz_t(), mod_int_.get_mpz_t());
      return RingElem(self, r);
    }
    case RingKind::PolyRing: {
      return make_poly_elem(self, base_,
                            detail::terms_mul(base_, a.as_poly().terms, b.as_poly().terms));
    }
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      MultiPoly::Terms prod = detail::terms_mul(K, a.as_poly().terms, b.as_poly().terms);
      RingElem raw = make_poly_elem(self, K, std::move(prod));
      return detail::quot_from_dense(self, detail::payload_to_dense(*this, raw));
    }
    case RingKind::FractionField: {
      const auto& fa = a.as_frac();
      const auto& fb = b.as_frac();
      return detail::make_frac(self, inner_poly_->mul(fa.num, fb.num),
                               inner_poly_->mul(fa.den, fb.den));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->mul(a.as_prod().parts[i], b.as_prod().parts[i]));
      auto pp = std::make_shared<ProdPayload>(ProdPayload{std::move(parts)});
      return RingElem(self, RingElem::Payload(std::move(pp)));
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

RingElem Ring::pow(const RingElem& a, const mpz_class& e) const {
  check_internal(sgn(e) >= 0, "pow requires a nonnegative exponent");
  RingElem acc = one();
  RingElem base_val = a;
  mpz_class rest = e;
  while (sgn(rest) > 0) {
    if (mpz_odd_p(rest.get_mpz_t())) acc = mul(acc, base_val);
    rest >>= 1;
    if (sgn(rest) > 0) base_val = mul(base_val, base_val);
  }
  return acc;
}

bool Ring::eq(const RingElem& a, const RingElem& b) const { return cmp(a, b) == 0; }

bool Ring::is_zero(const RingElem& a) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return a.as_int() == 0;
    case RingKind::Rationals:
      return a.as_rat() == 0;
    case RingKind::PolyRing:
    case RingKind::QuotientRing:
    case RingKind::FiniteField:
      return a.as_poly().terms.empty();
    case RingKind::FractionField:
      return inner_poly_->is_zero(a.as_frac().num);
    case RingKind::Product: {
      for (size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->is_zero(a.as_prod().parts[i])) return false;
      return true;
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

bool Ring::is_one(const RingElem& a) const { return eq(a, one()); }

int Ring::cmp(const RingElem& a, const RingElem& b) const {
  require_same_ring(a, b);
  switch (kind_) {
    case RingKind::Integers:
      return ::cmp(a.as_int(), b.as_int());
    case RingKind::Rationals:
      return ::cmp(a.as_rat(), b.as_rat());
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return ::cmp(a.as_int(), b.as_int());
    case RingKind::PolyRing:
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      const auto& ta = a.as_poly().terms;
      const auto& tb = b.as_poly().terms;
      auto ia = ta.begin();
      auto ib = tb.begin();
      for (; ia != ta.end() && ib != tb.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
        int c = K->cmp(ia->second, ib->second);
        if (c != 0) return c;
      }
      if (ia != ta.end()) return 1;
      if (ib != tb.end()) return -1;
      return 0;
    }
    case RingKind::FractionField: {
      int c = inner_poly_->cmp(a.as_frac().num, b.as_frac().num);
      if (c != 0) return c;
      return inner_poly_->cmp(a.as_frac().den, b.as_frac().den);
    }
    case RingKind::Product: {
      for (size_t i = 0; i < factors_.size(); ++i) {
        int c = factors_[i]->cmp(a.as_prod().parts[i], b.as_prod().parts[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

}  // namespace splitalg
