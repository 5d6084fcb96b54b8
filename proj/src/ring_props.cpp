#include <algorithm>

#include "ring_detail.hpp"
#include "splitalg/ring.hpp"
#include "splitalg/univar.hpp"

namespace splitalg {

using detail::is_quot_like;
using detail::payload_coeff_ring;

namespace {

// Uniform nilpotency index bound for the bottom ring of a polynomial tower:
// any nilpotent element x satisfies x^e = 0.  Returns nothing when the ring
// is reduced as far as we can certify (then nilpotent means zero).
std::optional<long> bottom_nilpotency_bound(const RingHandle& R) {
  switch (R->kind()) {
    case RingKind::IntegersMod:
      if (R->is_field()) return std::nullopt;
      return static_cast<long>(mpz_sizeinbase(R->modulus_int().get_mpz_t(), 2));
    case RingKind::QuotientRing:
      if (R->is_field()) return std::nullopt;
      return static_cast<long>(uni::deg(R->modulus_dense()));
    case RingKind::Product: {
      long best = 0;
      for (const auto& f : R->factors()) {
        auto b = bottom_nilpotency_bound(f);
        if (b) best = std::max(best, *b);
      }
      return best > 0 ? std::optional<long>(best) : std::nullopt;
    }
    default:
      return std::nullopt;  // fields, Z, Q: reduced
  }
}

// Number of bottom-ring coefficients when a polynomial-tower element is
// flattened all the way down.
long flattened_coeff_count(const RingElem& x) {
  const Ring& R = *x.owner();
  if (R.kind() != RingKind::PolyRing) return 1;
  long n = 0;
  for (const auto& [mono, c] : x.as_poly().terms) n += flattened_coeff_count(c);
  return n;
}

RingHandle polytower_bottom(RingHandle R) {
  while (R->kind() == RingKind::PolyRing) R = R->base();
  return R;
}

// Verdict on whether the set xs (in ring R) admits a nonzero common
// annihilator; witness annihilates every element of xs.  Polynomial rings
// reduce to their coefficients: a polynomial set has a nonzero annihilator
// iff already a nonzero constant one.
Regularity regular_over(const RingHandle& R, const std::vector<RingElem>& xs) {
  bool all_zero = true;
  for (const auto& x : xs)
    if (!R->is_zero(x)) all_zero = false;
  if (all_zero) return {Reg::ZeroDivisor, R->one()};

  if (R->is_integral_domain() || R->is_field()) return {Reg::Regular, std::nullopt};

  switch (R->kind()) {
    case RingKind::IntegersMod: {
      mpz_class g = R->modulus_int();
      for (const auto& x : xs)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.as_int().get_mpz_t());
      if (g == 1) return {Reg::Regular, std::nullopt};
      return {Reg::ZeroDivisor, R->from_int(R->modulus_int() / g)};
    }
    case RingKind::QuotientRing: {
      const RingHandle& K = R->inner_poly()->base();
      uni::Dense g = R->modulus_dense();
      for (const auto& x : xs)
        g = uni::gcd(K, g, detail::payload_to_dense(*R, x));
      if (uni::deg(g) == 0) return {Reg::Regular, std::nullopt};
      uni::Dense w = uni::div_exact(K, R->modulus_dense(), g);
      return {Reg::ZeroDivisor, detail::quot_from_dense(R, std::move(w))};
    }
    case RingKind::PolyRing: {
      std::vector<RingElem> coeffs;
      for (const auto& x : xs)
        for (const auto& [mono, c] : x.as_poly().terms) coeffs.push_back(c);
      Regularity inner = regular_over(R->base(), coeffs);
      if (inner.verdict == Reg::ZeroDivisor)
        return {Reg::ZeroDivisor, R->embed(*inner.witness)};
      return {inner.verdict, std::nullopt};
    }
    case RingKind::Product: {
      bool unknown = false;
      for (size_t i = 0; i < R->factors().size(); ++i) {
        std::vector<RingElem> comps;
        for (const auto& x : xs) comps.push_back(x.as_prod().parts[i]);
        Regularity slot = regular_over(R->factors()[i], comps);
        if (slot.verdict == Reg::ZeroDivisor) {
          std::vector<RingElem> parts;
          for (size_t j = 0; j < R->factors().size(); ++j)
            parts.push_back(j == i ? *slot.witness : R->factors()[j]->zero());
          return {Reg::ZeroDivisor, R->tuple(std::move(parts))};
        }
        if (slot.verdict == Reg::Unknown) unknown = true;
      }
      return {unknown ? Reg::Unknown : Reg::Regular, std::nullopt};
    }
    default:
      return {Reg::Unknown, std::nullopt};
  }
}

}  // namespace

std::optional<RingElem> Ring::try_inv(const RingElem& a) const {
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers: {
      const mpz_class& z = a.as_int();
      if (z == 1 || z == -1) return a;
      return std::nullopt;
    }
    case RingKind::Rationals: {
      if (a.as_rat() == 0) return std::nullopt;
      return RingElem(self, mpq_class(1 / a.as_rat()));
    }
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      mpz_class r;
      if (mpz_invert(r.get_mpz_t(), a.as_int().get_mpz_t(), mod_int_.get_mpz_t()) == 0)
        return std::nullopt;
      return RingElem(self, r);
    }
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      uni::Dense rep = detail::payload_to_dense(*this, a);
      if (uni::is_zero(rep)) return std::nullopt;
      uni::ExtGcd eg = uni::ext_gcd(K, rep, modulus_dense_);
      if (uni::deg(eg.g) != 0) return std::nullopt;
      return detail::quot_from_dense(self, std::move(eg.u));
    }
    case RingKind::PolyRing: {
      std::vector<int> zero_mono(vars_.size(), 0);
      RingElem c0 = base_->zero();
      auto it = a.as_poly().terms.find(zero_mono);
      if (it != a.as_poly().terms.end()) c0 = it->second;
      auto u0 = base_->try_inv(c0);
      if (!u0) return std::nullopt;
      RingElem h = sub(a, embed(c0));
      if (is_zero(h)) return embed(*u0);
      if (base_->is_integral_domain()) return std::nullopt;
      auto e = bottom_nilpotency_bound(polytower_bottom(base_));
      if (!e) return std::nullopt;
      // Geometric series: 1/a = u0 * sum_k (-h*u0)^k, finite iff h nilpotent.
      long bound = flattened_coeff_count(h) * *e;
      RingElem q = neg(mul(h, embed(*u0)));
      RingElem sum = one();
      RingElem term = q;
      for (long k = 0; k < bound && !is_zero(term); ++k) {
        sum = add(sum, term);
        term = mul(term, q);
      }
      if (!is_zero(term)) return std::nullopt;
      return mul(embed(*u0), sum);
    }
    case RingKind::FractionField: {
      const auto& fa = a.as_frac();
      if (inner_poly_->is_zero(fa.num)) return std::nullopt;
      return detail::make_frac(self, fa.den, fa.num);
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i) {
        auto inv_i = factors_[i]->try_inv(a.as_prod().parts[i]);
        if (!inv_i) return std::nullopt;
        parts.push_back(std::move(*inv_i));
      }
      return tuple(std::move(parts));
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

bool Ring::is_unit(const RingElem& a) const { return try_inv(a).has_value(); }

RingElem Ring::inv(const RingElem& a) const {
  auto r = try_inv(a);
  if (!r) fail(Err::NotAUnit, to_string(a) + " is not a unit in " + spec_string());
  return *r;
}

Regularity Ring::is_regular(const RingElem& a) const {
  if (is_zero(a)) return {Reg::ZeroDivisor, one()};
  return regular_over(shared_from_this(), {a});
}

mpz_class Ring::finite_cardinality() const {
  if (!cardinality_) fail(Err::InfiniteRing, spec_string() + " is not finite");
  return *cardinality_;
}

RingElem Ring::element_at(const mpz_class& index) const {
  mpz_class n = finite_cardinality();
  if (index < 0 || index >= n)
    fail(Err::IndexOutOfRange, "element index " + index.get_str() + " outside [0, " +
                                   n.get_str() + ")");
  auto self = shared_from_this();
  switch (kind_) {
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return RingElem(self, index);
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      const RingHandle& K = payload_coeff_ring(*this);
      mpz_class q = K->finite_cardinality();
      mpz_class rest = index;
      uni::Dense rep;
      int d = uni::deg(modulus_dense_);
      for (int i = 0; i < d; ++i) {
        mpz_class digit;
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                    q.get_mpz_t());
        rep.push_back(K->element_at(digit));
      }
      return detail::quot_from_dense(self, std::move(rep));
    }
    case RingKind::Product: {
      mpz_class rest = index;
      std::vector<RingElem> parts;
      for (const auto& f : factors_) {
        mpz_class card = f->finite_cardinality();
        mpz_class digit;
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                    card.get_mpz_t());
        parts.push_back(f->element_at(digit));
      }
      return tuple(std::move(parts));
    }
    default:
      fail(Err::InfiniteRing, spec_string() + " has no element enumeration");
  }
}

}  // namespace splitalg
