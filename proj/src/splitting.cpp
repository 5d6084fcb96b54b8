#include "splitalg/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <utility>

#include "ring_detail.hpp"

namespace splitalg {

// ---- SplitElement forwarders -------------------------------------------------

SplitElement SplitElement::operator+(const SplitElement& o) const {
  return alg_->add(*this, o);
}
SplitElement SplitElement::operator-(const SplitElement& o) const {
  return alg_->sub(*this, o);
}
SplitElement SplitElement::operator*(const SplitElement& o) const {
  return alg_->mul(*this, o);
}
SplitElement SplitElement::operator-() const { return alg_->neg(*this); }
bool SplitElement::operator==(const SplitElement& o) const { return alg_->eq(*this, o); }
bool SplitElement::is_zero() const { return alg_->is_zero(*this); }
std::string SplitElement::str() const { return alg_->to_string(*this); }

namespace {

void require_same_algebra(const SplitElement& a, const SplitElement& b) {
  check_internal(a.valid() && b.valid(), "uninitialized splitting algebra element");
  if (a.algebra().get() != b.algebra().get())
    fail(Err::AlgebraMismatch, "operands live in different splitting algebras");
}

size_t algebra_size_cap() {
  if (const char* env = std::getenv("SPLITALG_MAX_ALGEBRA_SIZE")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 40320;  // 8!
}

}  // namespace

// ---- permutations -------------------------------------------------------------

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm out;
  out.img.assign(img.size(), 0);
  for (int i = 1; i <= n(); ++i) out.img[static_cast<size_t>((*this)(i)-1)] = i;
  return out;
}

Perm Perm::identity(int n) {
  Perm p;
  for (int i = 1; i <= n; ++i) p.img.push_back(i);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  check_internal(1 <= a && a <= n && 1 <= b && b <= n, "transposition out of range");
  Perm p = identity(n);
  std::swap(p.img[static_cast<size_t>(a - 1)], p.img[static_cast<size_t>(b - 1)]);
  return p;
}

Perm compose(const Perm& s, const Perm& r) {
  check_internal(s.n() == r.n(), "composing permutations of different sizes");
  Perm out;
  for (int i = 1; i <= s.n(); ++i) out.img.push_back(r(s(i)));
  return out;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = Perm::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

std::string perm_string(const Perm& p) {
  std::string out = "[";
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p(i));
  }
  return out + "]";
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(static_cast<size_t>(p.n()) + 1, false);
  for (int i = 1; i <= p.n(); ++i) {
    if (seen[static_cast<size_t>(i)] || p(i) == i) continue;
    out += "(" + std::to_string(i);
    seen[static_cast<size_t>(i)] = true;
    for (int j = p(i); j != i; j = p(j)) {
      out += " " + std::to_string(j);
      seen[static_cast<size_t>(j)] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm parse_perm(int n, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  Perm p;
  size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ',' || std::isspace(static_cast<unsigned char>(body[pos]))))
      ++pos;
    size_t start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos == start) break;
    p.img.push_back(std::stoi(body.substr(start, pos - start)));
  }
  if (p.n() != n)
    fail(Err::MalformedSpec, "permutation needs exactly " + std::to_string(n) + " images");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int v = p(i);
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      fail(Err::MalformedSpec, "not a permutation of 1.." + std::to_string(n));
    seen[static_cast<size_t>(v)] = true;
  }
  return p;
}

// ---- construction ---------------------------------------------------------------

SplitAlgebraHandle SplitAlgebra::create(const MonicPoly& f) {
  int n = f.degree();
  size_t cap = algebra_size_cap();
  size_t fact = 1;
  for (int i = 2; i <= n; ++i) {
    if (fact > cap / static_cast<size_t>(i))
      fail(Err::SearchSpaceTooLarge,
           "degree " + std::to_string(n) + " needs a rank beyond the configured cap of " +
               std::to_string(cap));
    fact *= static_cast<size_t>(i);
  }

  auto alg = std::shared_ptr<SplitAlgebra>(new SplitAlgebra());
  alg->f_ = f;
  alg->n_ = n;
  const RingHandle& A = f.ring;
  size_t width = n >= 2 ? static_cast<size_t>(n - 1) : 0;
  std::vector<int> zero_key(width, 0);

  auto const_coords = [&](const RingElem& c) {
    Coords m;
    if (!A->is_zero(c)) m.emplace(zero_key, c);
    return m;
  };
  auto neg_coords = [&](const Coords& m) {
    Coords out = m;
    for (auto& [k, c] : out) c = A->neg(c);
    return out;
  };
  auto add_coords = [&](const Coords& a, const Coords& b) {
    Coords out = a;
    for (const auto& [k, c] : b) {
      auto it = out.find(k);
      if (it == out.end()) {
        out.emplace(k, c);
      } else {
        it->second = A->add(it->second, c);
        if (A->is_zero(it->second)) out.erase(it);
      }
    }
    return out;
  };
  auto shift_slot = [&](const Coords& m, size_t slot) {
    Coords out;
    for (const auto& [k, c] : m) {
      std::vector<int> nk = k;
      ++nk[slot];
      out.emplace(std::move(nk), c);
    }
    return out;
  };

  // Tower: peel one universal root per level by synthetic division.  The
  // quotient coefficients keep every exponent under its bound, so no
  // normalization is ever needed here; the dropped remainder at level i is
  // exactly the relation tau_i^i = sum_j red[i][j] tau_i^j.
  alg->tower_.assign(static_cast<size_t>(n) + 1, {});
  alg->red_.assign(static_cast<size_t>(n) + 1, {});
  std::vector<Coords> cur;
  for (const auto& c : f.coeffs) cur.push_back(const_coords(c));
  for (int i = n; i >= 1; --i) {
    alg->tower_[static_cast<size_t>(i)] = cur;
    if (i >= 2) {
      size_t slot = static_cast<size_t>(i - 2);
      auto& red_i = alg->red_[static_cast<size_t>(i)];
      red_i.resize(static_cast<size_t>(i));
      for (int j = 0; j < i; ++j)
        red_i[static_cast<size_t>(j)] = neg_coords(cur[static_cast<size_t>(j)]);
      std::vector<Coords> quot(static_cast<size_t>(i));
      quot[static_cast<size_t>(i - 1)] = const_coords(A->one());
      for (int k = i - 1; k >= 1; --k)
        quot[static_cast<size_t>(k - 1)] =
            add_coords(cur[static_cast<size_t>(k)],
                       shift_slot(quot[static_cast<size_t>(k)], slot));
      cur = std::move(quot);
    } else {
      alg->tau1_ = neg_coords(cur[0]);
    }
  }

  // Basis in graded order: total degree ascending, descending lex inside.
  std::vector<std::vector<int>> exps;
  std::vector<int> probe(width, 0);
  for (;;) {
    exps.push_back(probe);
    size_t s = 0;
    for (; s < width; ++s) {
      if (probe[s] + 1 < static_cast<int>(s) + 2) {
        ++probe[s];
        break;
      }
      probe[s] = 0;
    }
    if (s == width) break;
  }
  check_internal(exps.size() == fact, "basis enumeration size mismatch");
  std::sort(exps.begin(), exps.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da < db;
    return a > b;
  });
  for (size_t i = 0; i < exps.size(); ++i) alg->basis_pos_.emplace(exps[i], i);
  alg->basis_ = std::move(exps);
  return alg;
}

size_t SplitAlgebra::basis_index(const std::vector<int>& exp) const {
  auto it = basis_pos_.find(exp);
  if (it == basis_pos_.end()) fail(Err::IndexOutOfRange, "not a basis exponent tuple");
  return it->second;
}

// ---- element construction ---------------------------------------------------------

SplitElement SplitAlgebra::zero() const {
  return SplitElement(shared_from_this(), {});
}

SplitElement SplitAlgebra::one() const { return from_base(base()->one()); }

SplitElement SplitAlgebra::from_base(const RingElem& a) const {
  if (!same_ring(a.owner(), base()))
    fail(Err::ElementRingMismatch, "coefficient outside the base ring");
  Coords m;
  if (!base()->is_zero(a)) m.emplace(std::vector<int>(basis_[0].size(), 0), a);
  return SplitElement(shared_from_this(), std::move(m));
}

SplitElement SplitAlgebra::root(int i) const {
  if (i < 1 || i > n_) fail(Err::IndexOutOfRange, "root index outside 1..n");
  if (i == 1) return SplitElement(shared_from_this(), tau1_);
  std::vector<int> key(static_cast<size_t>(n_ - 1), 0);
  key[static_cast<size_t>(i - 2)] = 1;
  Coords m;
  m.emplace(std::move(key), base()->one());
  return SplitElement(shared_from_this(), std::move(m));
}

SplitElement SplitAlgebra::monomial(const std::vector<int>& exp, const RingElem& c) const {
  if (exp.size() != basis_[0].size())
    fail(Err::IndexOutOfRange, "exponent tuple has the wrong length");
  for (size_t s = 0; s < exp.size(); ++s)
    if (exp[s] < 0 || exp[s] >= static_cast<int>(s) + 2)
      fail(Err::IndexOutOfRange, "exponent outside the basis bounds");
  if (!same_ring(c.owner(), base()))
    fail(Err::ElementRingMismatch, "coefficient outside the base ring");
  Coords m;
  if (!base()->is_zero(c)) m.emplace(exp, c);
  return SplitElement(shared_from_this(), std::move(m));
}

// ---- arithmetic ---------------------------------------------------------------------

void SplitAlgebra::add_term(Coords& m, const std::vector<int>& key, const RingElem& c) const {
  if (base()->is_zero(c)) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
  } else {
    it->second = base()->add(it->second, c);
    if (base()->is_zero(it->second)) m.erase(it);
  }
}

SplitElement SplitAlgebra::add(const SplitElement& a, const SplitElement& b) const {
  require_same_algebra(a, b);
  Coords out = a.coords();
  for (const auto& [k, c] : b.coords()) add_term(out, k, c);
  return SplitElement(shared_from_this(), std::move(out));
}

SplitElement SplitAlgebra::sub(const SplitElement& a, const SplitElement& b) const {
  return add(a, neg(b));
}

SplitElement SplitAlgebra::neg(const SplitElement& a) const {
  Coords out = a.coords();
  for (auto& [k, c] : out) c = base()->neg(c);
  return SplitElement(shared_from_this(), std::move(out));
}

SplitAlgebra::Coords SplitAlgebra::mul_raw(const Coords& a, const Coords& b) const {
  const RingHandle& A = base();
  Coords out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      RingElem c = A->mul(ca, cb);
      if (A->is_zero(c)) continue;
      std::vector<int> k(ka.size());
      for (size_t s = 0; s < k.size(); ++s) k[s] = ka[s] + kb[s];
      add_term(out, k, c);
    }
  return out;
}

void SplitAlgebra::normalize(Coords& m) const {
  const RingHandle& A = base();
  for (int i = 2; i <= n_; ++i) {
    size_t slot = static_cast<size_t>(i - 2);
    Coords work;
    for (auto it = m.begin(); it != m.end();) {
      if (it->first[slot] >= i) {
        work.emplace(it->first, it->second);
        it = m.erase(it);
      } else {
        ++it;
      }
    }
    const auto& red_i = red_[static_cast<size_t>(i)];
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const std::vector<int>& k = node.key();
      RingElem c = node.mapped();
      if (A->is_zero(c)) continue;
      std::vector<int> stem = k;
      stem[slot] -= i;
      for (int j = 0; j < i; ++j) {
        for (const auto& [rm, rc] : red_i[static_cast<size_t>(j)]) {
          std::vector<int> nk(stem.size());
          for (size_t s = 0; s < nk.size(); ++s) nk[s] = stem[s] + rm[s];
          nk[slot] += j;
          RingElem nc = A->mul(c, rc);
          if (A->is_zero(nc)) continue;
          Coords& target = nk[slot] >= i ? work : m;
          auto it = target.find(nk);
          if (it == target.end()) {
            target.emplace(std::move(nk), std::move(nc));
          } else {
            it->second = A->add(it->second, nc);
            if (A->is_zero(it->second)) target.erase(it);
          }
        }
      }
    }
  }
}

SplitElement SplitAlgebra::mul(const SplitElement& a, const SplitElement& b) const {
  require_same_algebra(a, b);
  Coords out = mul_raw(a.coords(), b.coords());
  normalize(out);
  return SplitElement(shared_from_this(), std::move(out));
}

SplitElement SplitAlgebra::pow(const SplitElement& a, const mpz_class& e) const {
  check_internal(sgn(e) >= 0, "pow requires a nonnegative exponent");
  SplitElement acc = one();
  SplitElement b = a;
  mpz_class rest = e;
  while (sgn(rest) > 0) {
    if (mpz_odd_p(rest.get_mpz_t())) acc = mul(acc, b);
    rest >>= 1;
    if (sgn(rest) > 0) b = mul(b, b);
  }
  return acc;
}

bool SplitAlgebra::eq(const SplitElement& a, const SplitElement& b) const {
  return cmp(a, b) == 0;
}

bool SplitAlgebra::is_zero(const SplitElement& a) const { return a.coords().empty(); }

int SplitAlgebra::cmp(const SplitElement& a, const SplitElement& b) const {
  require_same_algebra(a, b);
  auto ia = a.coords().begin();
  auto ib = b.coords().begin();
  for (; ia != a.coords().end() && ib != b.coords().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
    int c = base()->cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.coords().end()) return 1;
  if (ib != b.coords().end()) return -1;
  return 0;
}

// ---- coordinates / text --------------------------------------------------------------

std::vector<RingElem> SplitAlgebra::coordinates(const SplitElement& x) const {
  std::vector<RingElem> out(basis_.size(), base()->zero());
  for (const auto& [k, c] : x.coords()) out[basis_index(k)] = c;
  return out;
}

SplitElement SplitAlgebra::from_coordinates(const std::vector<RingElem>& c) const {
  if (c.size() != basis_.size())
    fail(Err::DegreeMismatch, "coordinate vector length differs from the rank");
  Coords m;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!same_ring(c[i].owner(), base()))
      fail(Err::ElementRingMismatch, "coordinate outside the base ring");
    if (!base()->is_zero(c[i])) m.emplace(basis_[i], c[i]);
  }
  return SplitElement(shared_from_this(), std::move(m));
}

std::optional<RingElem> SplitAlgebra::constant_value(const SplitElement& x) const {
  if (x.coords().empty()) return base()->zero();
  if (x.coords().size() > 1) return std::nullopt;
  const auto& [k, c] = *x.coords().begin();
  for (int v : k)
    if (v != 0) return std::nullopt;
  return c;
}

SplitElement SplitAlgebra::eval_dense(const std::vector<RingElem>& poly,
                                      const SplitElement& x) const {
  SplitElement acc = zero();
  for (size_t k = poly.size(); k-- > 0;) acc = add(mul(acc, x), from_base(poly[k]));
  return acc;
}

std::vector<SplitElement> SplitAlgebra::tower_poly(int i) const {
  if (i < 1 || i > n_) fail(Err::IndexOutOfRange, "tower level outside 1..n");
  std::vector<SplitElement> out;
  for (const auto& c : tower_[static_cast<size_t>(i)])
    out.push_back(SplitElement(shared_from_this(), c));
  return out;
}

std::string SplitAlgebra::to_string(const SplitElement& x) const {
  std::vector<std::string> names;
  for (int i = 2; i <= n_; ++i) names.push_back("tau" + std::to_string(i));
  return detail::render_terms(x.coords(), base(), names);
}

SplitElement SplitAlgebra::parse(const std::string& text) const {
  if (n_ == 0) return from_base(base()->parse(text));
  std::vector<std::string> names;
  for (int i = 1; i <= n_; ++i) names.push_back("tau" + std::to_string(i));
  RingHandle P = Ring::poly_ring(base(), names);
  RingElem e = P->parse(text);
  std::map<std::pair<int, int>, SplitElement> pow_memo;
  auto root_pow = [&](int i, int exp) {
    auto it = pow_memo.find({i, exp});
    if (it != pow_memo.end()) return it->second;
    SplitElement v = pow(root(i), exp);
    pow_memo.emplace(std::make_pair(i, exp), v);
    return v;
  };
  SplitElement acc = zero();
  for (const auto& [mono, c] : e.as_poly().terms) {
    SplitElement term = from_base(c);
    for (size_t s = 0; s < mono.size(); ++s)
      if (mono[s] > 0) term = mul(term, root_pow(static_cast<int>(s) + 1, mono[s]));
    acc = add(acc, term);
  }
  return acc;
}

// ---- permutation action ----------------------------------------------------------------

SplitElement apply_permutation(const Perm& s, const SplitElement& x) {
  check_internal(x.valid(), "uninitialized splitting algebra element");
  const SplitAlgebraHandle& alg = x.algebra();
  if (s.n() != alg->degree())
    fail(Err::DegreeMismatch, "permutation size differs from the algebra degree");
  Perm sinv = s.inverse();
  std::map<std::pair<int, int>, SplitElement> pow_memo;
  auto image_pow = [&](int i, int exp) {
    auto it = pow_memo.find({i, exp});
    if (it != pow_memo.end()) return it->second;
    SplitElement v = alg->pow(alg->root(sinv(i)), exp);
    pow_memo.emplace(std::make_pair(i, exp), v);
    return v;
  };
  SplitElement acc = alg->zero();
  for (const auto& [mono, c] : x.coords()) {
    SplitElement term = alg->from_base(c);
    for (size_t slot = 0; slot < mono.size(); ++slot)
      if (mono[slot] > 0)
        term = alg->mul(term, image_pow(static_cast<int>(slot) + 2, mono[slot]));
    acc = alg->add(acc, term);
  }
  return acc;
}

// ---- discriminant ------------------------------------------------------------------------

RingElem discriminant(const SplitAlgebraHandle& alg) {
  const RingHandle& A = alg->base();
  int n = alg->degree();
  SplitElement prod = alg->one();
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      SplitElement d = alg->sub(alg->root(i), alg->root(j));
      prod = alg->mul(prod, alg->mul(d, d));
    }
  auto value = alg->constant_value(prod);
  check_internal(value.has_value(), "squared root differences left the base ring");

  // independent route: (-1)^{n(n-1)/2} prod_j f'(tau_j)
  std::vector<RingElem> fd = derivative_coeffs(alg->poly());
  SplitElement alt = alg->one();
  for (int j = 1; j <= n; ++j) alt = alg->mul(alt, alg->eval_dense(fd, alg->root(j)));
  if ((n * (n - 1) / 2) % 2 == 1) alt = alg->neg(alt);
  check_internal(alg->eq(prod, alt), "discriminant routes disagree");
  return *value;
}

RingElem discriminant(const MonicPoly& f) { return discriminant(SplitAlgebra::create(f)); }

MonicPoly conjugate_product(const SplitElement& x) {
  const SplitAlgebraHandle& A = x.algebra();
  // Dense coefficients of the growing product, constant term first.
  std::vector<SplitElement> c{A->one()};
  for (const Perm& s : all_permutations(A->degree())) {
    SplitElement y = apply_permutation(s, x);
    std::vector<SplitElement> nc(c.size() + 1, A->zero());
    for (size_t k = 0; k < c.size(); ++k) {
      nc[k + 1] = A->add(nc[k + 1], c[k]);
      nc[k] = A->sub(nc[k], A->mul(y, c[k]));
    }
    c = std::move(nc);
  }
  std::vector<RingElem> base_coeffs;
  base_coeffs.reserve(c.size());
  for (const SplitElement& e : c) {
    auto v = A->constant_value(e);
    check_internal(v.has_value(),
                   "conjugate product produced a coefficient outside the base");
    base_coeffs.push_back(*v);
  }
  return make_monic(A->base(), std::move(base_coeffs));
}

// ---- ring homomorphisms --------------------------------------------------------------------

namespace {

std::function<RingElem(const RingElem&)> inclusion_fn(const RingHandle& src,
                                                      const RingHandle& dst) {
  if (same_ring(src, dst))
    return [](const RingElem& x) { return x; };
  if (src->kind() == RingKind::Integers) {
    RingHandle d = dst;
    return [d](const RingElem& x) { return d->from_int(x.as_int()); };
  }
  switch (dst->kind()) {
    case RingKind::PolyRing: {
      auto inner = inclusion_fn(src, dst->base());
      RingHandle d = dst;
      return [d, inner](const RingElem& x) { return d->embed(inner(x)); };
    }
    case RingKind::FractionField:
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      auto inner = inclusion_fn(src, dst->inner_poly());
      RingHandle d = dst;
      return [d, inner](const RingElem& x) { return d->embed(inner(x)); };
    }
    default:
      fail(Err::NotAHomomorphism, "no canonical inclusion of " + src->spec_string() +
                                      " into " + dst->spec_string());
  }
}

}  // namespace

RingHom RingHom::identity(RingHandle R) {
  RingHandle r2 = R;
  return RingHom(std::move(R), std::move(r2), [](const RingElem& x) { return x; });
}

RingHom RingHom::initial(RingHandle dst) {
  RingHandle d = dst;
  return RingHom(Ring::integers(), std::move(dst),
                 [d](const RingElem& x) { return d->from_int(x.as_int()); });
}

RingHom RingHom::inclusion(RingHandle src, RingHandle dst) {
  auto fn = inclusion_fn(src, dst);
  return RingHom(std::move(src), std::move(dst), std::move(fn));
}

RingHom RingHom::generator_image(RingHandle src, RingHandle dst, RingElem alpha,
                                 const RingHom& coeff_hom) {
  if (src->kind() != RingKind::QuotientRing && src->kind() != RingKind::FiniteField)
    fail(Err::UnsupportedBaseRing, "generator images need a quotient-ring source");
  const RingHandle& K = src->inner_poly()->base();
  if (!same_ring(coeff_hom.src(), K) || !same_ring(coeff_hom.dst(), dst))
    fail(Err::RingMismatch, "coefficient hom endpoints do not match");
  if (!same_ring(alpha.owner(), dst))
    fail(Err::ElementRingMismatch, "generator image outside the target ring");
  auto horner = [dst, alpha, coeff_hom](const uni::Dense& rep) {
    RingElem acc = dst->zero();
    for (size_t k = rep.size(); k-- > 0;)
      acc = dst->add(dst->mul(acc, alpha), coeff_hom(rep[k]));
    return acc;
  };
  if (!dst->is_zero(horner(src->modulus_dense())))
    fail(Err::NotAHomomorphism, "the defining relation does not vanish at the image");
  RingHandle s = src;
  return RingHom(src, dst, [s, horner](const RingElem& x) {
    return horner(detail::payload_to_dense(*s, x));
  });
}

RingHom RingHom::poly_images(RingHandle src, RingHandle dst,
                             std::vector<RingElem> var_images, const RingHom& coeff_hom) {
  if (src->kind() != RingKind::PolyRing)
    fail(Err::UnsupportedBaseRing, "variable images need a polynomial-ring source");
  if (var_images.size() != src->vars().size())
    fail(Err::RingMismatch, "one image per variable required");
  if (!same_ring(coeff_hom.src(), src->base()) || !same_ring(coeff_hom.dst(), dst))
    fail(Err::RingMismatch, "coefficient hom endpoints do not match");
  for (const auto& v : var_images)
    if (!same_ring(v.owner(), dst))
      fail(Err::ElementRingMismatch, "variable image outside the target ring");
  RingHandle d = dst;
  auto imgs = std::make_shared<std::vector<RingElem>>(std::move(var_images));
  return RingHom(std::move(src), dst, [d, imgs, coeff_hom](const RingElem& x) {
    RingElem acc = d->zero();
    for (const auto& [mono, c] : x.as_poly().terms) {
      RingElem term = coeff_hom(c);
      for (size_t s = 0; s < mono.size(); ++s)
        if (mono[s] > 0)
          term = d->mul(term, d->pow((*imgs)[s], mono[s]));
      acc = d->add(acc, term);
    }
    return acc;
  });
}

RingHom RingHom::composed(const RingHom& first, const RingHom& then) {
  if (!same_ring(first.dst(), then.src()))
    fail(Err::RingMismatch, "composition endpoints do not match");
  return RingHom(first.src(), then.dst(), [first, then](const RingElem& x) {
    return then(first(x));
  });
}

// ---- base change -----------------------------------------------------------------------------

SplitAlgebraHandle extend_scalars(const SplitAlgebraHandle& alg, const RingHom& h) {
  if (!same_ring(h.src(), alg->base()))
    fail(Err::RingMismatch, "hom source differs from the algebra base");
  std::vector<RingElem> mapped;
  for (const auto& c : alg->poly().coeffs) mapped.push_back(h(c));
  return SplitAlgebra::create(make_monic(h.dst(), std::move(mapped)));
}

SplitElement map_scalars(const SplitAlgebraHandle& src, const SplitAlgebraHandle& dst,
                         const RingHom& h, const SplitElement& x) {
  check_internal(x.valid() && x.algebra().get() == src.get(),
                 "element does not belong to the source algebra");
  if (!same_ring(h.src(), src->base()) || !same_ring(h.dst(), dst->base()) ||
      src->degree() != dst->degree())
    fail(Err::AlgebraMismatch, "base change endpoints do not match");
  for (size_t k = 0; k < src->poly().coeffs.size(); ++k)
    if (!dst->base()->eq(h(src->poly().coeffs[k]), dst->poly().coeffs[k]))
      fail(Err::AlgebraMismatch, "target polynomial is not the image of the source");
  SplitElement::Coords out;
  for (const auto& [k, c] : x.coords()) {
    RingElem v = h(c);
    if (!dst->base()->is_zero(v)) out.emplace(k, v);
  }
  return SplitElement(dst, std::move(out));
}

}  // namespace splitalg
