#pragma once

#include <functional>

#include "splitalg/monic_poly.hpp"

namespace splitalg {

class SplitAlgebra;
using SplitAlgebraHandle = std::shared_ptr<const SplitAlgebra>;

/// Element of a splitting algebra, stored as coefficients on the monomial
/// basis tau_2^{m_2} ... tau_n^{m_n} with 0 <= m_i < i.  tau_1 is not a basis
/// variable; it expands through the algebra's degree-one tower relation.
class SplitElement {
public:
  using Coords = std::map<std::vector<int>, RingElem, MultiPoly::LexDesc>;

  SplitElement() = default;
  SplitElement(SplitAlgebraHandle alg, Coords coords)
      : alg_(std::move(alg)), coords_(std::move(coords)) {}

  const SplitAlgebraHandle& algebra() const { return alg_; }
  const Coords& coords() const { return coords_; }
  bool valid() const { return alg_ != nullptr; }

  SplitElement operator+(const SplitElement& o) const;
  SplitElement operator-(const SplitElement& o) const;
  SplitElement operator*(const SplitElement& o) const;
  SplitElement operator-() const;
  bool operator==(const SplitElement& o) const;
  bool operator!=(const SplitElement& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string str() const;

private:
  SplitAlgebraHandle alg_;
  Coords coords_;
};

/// Permutation of {1..n}; img[i-1] is the image of i.
struct Perm {
  std::vector<int> img;

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i - 1)]; }
  bool is_identity() const;
  Perm inverse() const;
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);
};

/// Group product with "apply left first": (compose(s, r))(i) = r(s(i)).
/// Under this convention the algebra action is a homomorphism:
/// apply_permutation(compose(s, r), x) = apply_permutation(s, apply_permutation(r, x)),
/// i.e. phi_{sr} = phi_s . phi_r as maps.
Perm compose(const Perm& s, const Perm& r);

std::vector<Perm> all_permutations(int n);  // lexicographic by image tuple
std::string perm_string(const Perm& p);    // "[2,1,3]"
std::string cycle_string(const Perm& p);   // "(1 2)"
Perm parse_perm(int n, const std::string& text);  // "2,1,3" or "[2,1,3]"

/// The splitting algebra of a monic polynomial f of degree n over its
/// coefficient ring A: the universal A-algebra where f factors completely
/// into linear factors (t - tau_1)...(t - tau_n).  Free A-module of rank n!
/// with the monomial basis above; construction peels one universal root per
/// tower level, so no relation rewriting is needed until elements are
/// multiplied.
class SplitAlgebra : public std::enable_shared_from_this<SplitAlgebra> {
public:
  /// Basis size guard: refuses degrees with n! above the cap, which defaults
  /// to 8! = 40320 and can be overridden via SPLITALG_MAX_ALGEBRA_SIZE.
  static SplitAlgebraHandle create(const MonicPoly& f);

  const MonicPoly& poly() const { return f_; }
  const RingHandle& base() const { return f_.ring; }
  int degree() const { return n_; }
  size_t basis_size() const { return basis_.size(); }  // n!

  /// Basis exponent tuples in graded order (total degree ascending, then
  /// descending lexicographic within a degree).
  const std::vector<std::vector<int>>& basis_exponents() const { return basis_; }
  size_t basis_index(const std::vector<int>& exp) const;

  SplitElement zero() const;
  SplitElement one() const;
  SplitElement from_base(const RingElem& a) const;
  SplitElement from_int(long v) const { return from_base(base()->from_int(v)); }
  /// The i-th universal root, 1 <= i <= n.
  SplitElement root(int i) const;
  /// c times the basis monomial with the given exponents (within bounds).
  SplitElement monomial(const std::vector<int>& exp, const RingElem& c) const;

  SplitElement add(const SplitElement& a, const SplitElement& b) const;
  SplitElement sub(const SplitElement& a, const SplitElement& b) const;
  SplitElement neg(const SplitElement& a) const;
  SplitElement mul(const SplitElement& a, const SplitElement& b) const;
  SplitElement pow(const SplitElement& a, const mpz_class& e) const;
  bool eq(const SplitElement& a, const SplitElement& b) const;
  bool is_zero(const SplitElement& a) const;
  int cmp(const SplitElement& a, const SplitElement& b) const;

  /// Coordinates over the base in basis_exponents() order, length n!.
  std::vector<RingElem> coordinates(const SplitElement& x) const;
  SplitElement from_coordinates(const std::vector<RingElem>& c) const;
  /// The base coefficient when x is supported on the monomial 1 alone.
  std::optional<RingElem> constant_value(const SplitElement& x) const;

  /// Evaluate a dense polynomial with base coefficients at x.
  SplitElement eval_dense(const std::vector<RingElem>& poly, const SplitElement& x) const;

  /// Plain coefficients a_0..a_i of the tower polynomial at level i (monic of
  /// degree i, 1 <= i <= n); f itself at level n.
  std::vector<SplitElement> tower_poly(int i) const;

  std::string to_string(const SplitElement& x) const;
  /// Parses tau1..tauN plus everything the base ring's parser knows.
  SplitElement parse(const std::string& text) const;

private:
  SplitAlgebra() = default;

  using Coords = SplitElement::Coords;
  Coords mul_raw(const Coords& a, const Coords& b) const;
  void normalize(Coords& m) const;
  void add_term(Coords& m, const std::vector<int>& key, const RingElem& c) const;

  MonicPoly f_{};
  int n_ = 0;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, size_t> basis_pos_;
  // red_[i][j]: tau_i^i = sum_j red_[i][j] tau_i^j, coefficients supported on
  // tau_{i+1}..tau_n only; indices 2 <= i <= n, 0 <= j < i.
  std::vector<std::vector<Coords>> red_;
  std::vector<std::vector<Coords>> tower_;  // tower_[i] = plain coeffs of f_i
  Coords tau1_;                             // expansion of tau_1
};

/// The action of a permutation on the splitting algebra: the base-algebra map
/// sending tau_i to tau_{s^{-1}(i)}.
SplitElement apply_permutation(const Perm& s, const SplitElement& x);

/// Product of all squared root differences (tau_i - tau_j)^2 over i > j;
/// always a base ring element.  Cross-checked internally against the signed
/// product of derivative values (-1)^{n(n-1)/2} prod_j f'(tau_j).
RingElem discriminant(const SplitAlgebraHandle& alg);
RingElem discriminant(const MonicPoly& f);

/// prod_{s in S_n} (t - phi_s(x)), expanded in A_f[t].  Every coefficient is
/// fixed by the full symmetric action and lands in the base, so the result is
/// a monic polynomial of degree n! over A.
MonicPoly conjugate_product(const SplitElement& x);

/// Structured ring homomorphism between base rings.  Every constructor
/// builds a map that is a homomorphism by construction (initial maps, free
/// polynomial images, canonical inclusions) or validates the one defining
/// relation (generator images).
class RingHom {
public:
  const RingHandle& src() const { return src_; }
  const RingHandle& dst() const { return dst_; }
  RingElem operator()(const RingElem& x) const { return apply_(x); }

  static RingHom identity(RingHandle R);
  /// From Z into any ring (the unique hom), and Z -> Zmod(m) reduction.
  static RingHom initial(RingHandle dst);
  /// src structurally contained in dst through polynomial / fraction /
  /// quotient layers, or src = Z; fails when no canonical inclusion exists.
  static RingHom inclusion(RingHandle src, RingHandle dst);
  /// Quot(K[x], c) -> B sending x to alpha; validates c(alpha) = 0 and maps
  /// K through the given coefficient hom.
  static RingHom generator_image(RingHandle src, RingHandle dst, RingElem alpha,
                                 const RingHom& coeff_hom);
  /// Poly(S; vars) -> B from images of the variables and a hom on S.
  static RingHom poly_images(RingHandle src, RingHandle dst,
                             std::vector<RingElem> var_images, const RingHom& coeff_hom);
  static RingHom composed(const RingHom& first, const RingHom& then);

private:
  RingHom(RingHandle s, RingHandle d, std::function<RingElem(const RingElem&)> f)
      : src_(std::move(s)), dst_(std::move(d)), apply_(std::move(f)) {}
  RingHandle src_, dst_;
  std::function<RingElem(const RingElem&)> apply_;
};

/// Base change: the splitting algebra of the image polynomial, together with
/// the coefficientwise element map (basis monomials map to themselves).
SplitAlgebraHandle extend_scalars(const SplitAlgebraHandle& alg, const RingHom& h);
SplitElement map_scalars(const SplitAlgebraHandle& src, const SplitAlgebraHandle& dst,
                         const RingHom& h, const SplitElement& x);

}  // namespace splitalg
