#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitalg/linalg.hpp"
#include "splitalg/splitting.hpp"

namespace splitalg {

class TensorAlgebra;
using TensorAlgebraHandle = std::shared_ptr<const TensorAlgebra>;

/// Element of a tensor product of splitting algebras over a common base.
/// Stored on the product basis: one exponent tuple formed by concatenating
/// the factor basis exponents.
class TensorElement {
 public:
  TensorElement() = default;
  const TensorAlgebraHandle& algebra() const { return alg_; }
  std::string to_string() const;
  bool is_zero() const;
  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;
  TensorElement operator-() const;

 private:
  friend class TensorAlgebra;
  using Coords = SplitElement::Coords;
  TensorElement(TensorAlgebraHandle a, Coords c) : alg_(std::move(a)), c_(std::move(c)) {}
  TensorAlgebraHandle alg_;
  Coords c_;
};

/// A_{g_1} (x)_A ... (x)_A A_{g_m}: free A-module of rank prod n_j!, with
/// basis the products of one basis monomial per factor.  All factors must
/// share the same base ring.
class TensorAlgebra : public std::enable_shared_from_this<TensorAlgebra> {
 public:
  static TensorAlgebraHandle create(std::vector<SplitAlgebraHandle> factors);

  const RingHandle& base() const { return base_; }
  const std::vector<SplitAlgebraHandle>& factors() const { return factors_; }
  size_t rank() const { return basis_.size(); }

  /// Concatenated exponent tuples; index order puts the first factor most
  /// significant, each factor running through its own graded basis order.
  const std::vector<std::vector<int>>& basis_exponents() const { return basis_; }
  size_t basis_index(const std::vector<int>& exp) const;

  TensorElement zero() const;
  TensorElement one() const;
  TensorElement from_base(const RingElem& a) const;
  /// x in factor j (0-based) tensored with 1 everywhere else.
  TensorElement embed_factor(size_t j, const SplitElement& x) const;
  /// rho_{k,j}: universal root k of factor j, embedded.  1 <= k <= n_j.
  TensorElement root_image(int k, size_t j) const;

  TensorElement add(const TensorElement& a, const TensorElement& b) const;
  TensorElement sub(const TensorElement& a, const TensorElement& b) const;
  TensorElement neg(const TensorElement& a) const;
  TensorElement mul(const TensorElement& a, const TensorElement& b) const;
  TensorElement pow(const TensorElement& a, const mpz_class& e) const;
  bool eq(const TensorElement& a, const TensorElement& b) const;
  bool is_zero(const TensorElement& a) const;

  /// Coordinates over the base in basis_exponents() order.
  std::vector<RingElem> coordinates(const TensorElement& x) const;
  TensorElement from_coordinates(const std::vector<RingElem>& c) const;

  std::string to_string(const TensorElement& x) const;

 private:
  TensorAlgebra() = default;
  using Coords = TensorElement::Coords;
  /// Rewrites a raw product term by term through the factor algebras.
  void accumulate_product(Coords& out, const std::vector<int>& ka, const std::vector<int>& kb,
                          const RingElem& c) const;
  std::vector<int> slice(const std::vector<int>& key, size_t j) const;

  RingHandle base_;
  std::vector<SplitAlgebraHandle> factors_;
  std::vector<size_t> offset_;  // slot offset of factor j inside the key
  size_t width_ = 0;            // total key length, sum of (n_j - 1)
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, size_t> basis_pos_;
  std::vector<std::string> names_;
};

/// A-algebra map out of a splitting algebra, determined by the universal
/// property: a base coefficient homomorphism plus images for the universal
/// roots whose linear factors multiply back to the image of f.  The
/// factorization identity is verified coefficientwise at construction.
class AlgebraHom {
 public:
  enum class Target { Ring, Split, Tensor };

  static AlgebraHom to_ring(SplitAlgebraHandle src, RingHom coeff, std::vector<RingElem> roots);
  static AlgebraHom to_split(SplitAlgebraHandle src, SplitAlgebraHandle dst, RingHom coeff,
                             std::vector<SplitElement> roots);
  static AlgebraHom to_tensor(SplitAlgebraHandle src, TensorAlgebraHandle dst, RingHom coeff,
                              std::vector<TensorElement> roots);

  Target target() const;
  const SplitAlgebraHandle& source() const;
  const RingHom& coefficient_map() const;
  const RingHandle& ring_target() const;
  const SplitAlgebraHandle& split_target() const;
  const TensorAlgebraHandle& tensor_target() const;

  RingElem map_to_ring(const SplitElement& x) const;
  SplitElement map_to_split(const SplitElement& x) const;
  TensorElement map_to_tensor(const SplitElement& x) const;

 private:
  struct Impl;
  explicit AlgebraHom(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Permutation increasing on each consecutive block of the composition,
/// together with that composition.  These represent the cosets of the
/// block-stabilizing subgroup; there are n!/prod(n_j!) of them.
struct Shuffle {
  std::vector<int> composition;
  Perm perm;
};

/// All shuffles of the composition in lexicographic image order.
/// Parts must be positive.
std::vector<Shuffle> shuffles(const std::vector<int>& composition);

/// Bezout certificate for a factor pair: u * g_i + v * g_j = 1, with u and v
/// given by plain coefficient vectors over the base (constant term first).
struct BezoutCert {
  size_t i = 0;
  size_t j = 0;
  std::vector<RingElem> u;
  std::vector<RingElem> v;
};

/// One factor of the root-adjunction decomposition: the base gains a root
/// upsilon of g, and the remaining roots generate the splitting algebra of
/// the complementary factor h = f / (t - upsilon) over the extended base.
struct CrtComponent {
  MonicPoly g;
  RingHandle ext;           // base for deg g = 1, otherwise ext = base[t]/(g)
  RingElem upsilon;         // image of the adjoined root inside ext
  MonicPoly h;              // f / (t - upsilon) over ext
  SplitAlgebraHandle algebra;
  AlgebraHom projection;    // tau_n -> upsilon, tau_k -> root k of h
};

/// A_f ~= prod_i (A[upsilon_i])_{h_i} for f = prod g_i with the g_i pairwise
/// coprime.  The combined projection matrix over A is computed and must have
/// unit determinant.
struct CrtSplit {
  std::vector<CrtComponent> components;
  Matrix matrix;   // flattened coordinates of all projections, over the base
  RingElem det;
  bool verified = false;
};

/// Coprimality is certified by polynomial gcds when the base is a field and
/// by the supplied Bezout data otherwise; every unordered factor pair needs
/// a certificate in that case.  Factors of degree >= 2 over a non-field base
/// are not supported.
CrtSplit crt_split(const SplitAlgebraHandle& alg, const std::vector<MonicPoly>& factors,
                   const std::vector<BezoutCert>& certs = {});

/// The combined map prod_sigma phi_sigma from A_f into one copy of
/// A_{g_1} (x) ... (x) A_{g_m} per shuffle sigma, with phi_sigma sending
/// tau_{sigma(p_{j-1}+k)} to root_image(k, j): the sigma-images of block j
/// name the universal roots that map onto factor j's roots, in order.
struct ShuffleDecomposition {
  std::vector<Shuffle> sigma;
  TensorAlgebraHandle tensor;
  std::vector<AlgebraHom> maps;  // one per shuffle, same order
  Matrix matrix;                 // (count * tensor rank) square, over the base
  RingElem det;
  bool invertible = false;
};

/// Verifies the decomposition is an isomorphism by computing the determinant
/// of the combined coordinate matrix; a non-unit determinant is a fatal
/// inconsistency.
ShuffleDecomposition shuffle_decomposition(const SplitAlgebraHandle& alg,
                                           const std::vector<MonicPoly>& factors,
                                           const std::vector<BezoutCert>& certs = {});

/// Complete orthogonal set of primitive idempotents of A_f for a separable f
/// over a finite field, computed by adjoining one root at a time and pulling
/// the component units back through the split.  Deterministic order; the
/// idempotent identities are re-verified before returning.
std::vector<SplitElement> primitive_idempotents(const SplitAlgebraHandle& alg);

/// Maximal ideal of A_f over a finite field, described by a basis of its
/// kernel representation: the ideal is the kernel of evaluating the universal
/// roots at an arrangement of the actual roots in the splitting field L.
struct MaximalIdealDesc {
  SplitAlgebraHandle algebra;
  std::vector<SplitElement> kernel_basis;  // free basis, codimension [L:K]
  int residue_degree = 1;                  // [L:K]
};

/// All maximal ideals with residue field the full splitting field, one per
/// distinct evaluation kernel over the arrangements of roots (with the
/// correct multiplicities when f is not separable).  Deterministic order.
std::vector<MaximalIdealDesc> maximal_ideals(const SplitAlgebraHandle& alg);

/// The symmetric-action stabilizer of one maximal ideal of A_f over a finite
/// field, for separable f: canonically isomorphic to the Galois group of the
/// splitting field.  All structural identities are checked and reported.
struct GaloisReport {
  std::vector<Perm> elements;    // sorted by image tuple
  std::vector<Perm> generators;  // greedy minimal generating subset
  int group_order = 0;
  int residue_degree = 0;
  size_t ideal_count = 0;
  bool order_matches_degree = false;  // |G| = [L:K]
  bool closed_under_ops = false;      // products and inverses stay inside
  bool orbit_stabilizer_ok = false;   // |G| * #ideals = n!
  bool fixed_field_is_base = false;   // joint fixed subspace of L is K
};

GaloisReport galois_group(const MonicPoly& f);

/// The symmetric group permutes the maximal ideals above transitively.
struct TransitivityReport {
  size_t ideal_count = 0;
  size_t orbit_size = 0;
  bool transitive = false;
};

/// Direct search over all of S_n; degrees above 5 are refused.
TransitivityReport transitivity_check(const SplitAlgebraHandle& alg);

/// Worked inseparable example: t^3 - s over F_3(s).  All three squared root
/// differences vanish, the ideal generated by the differences is stable with
/// the quotient action trivial, yet the invariant module is just the base.
struct InseparableDemoReport {
  SplitAlgebraHandle algebra;
  bool squares_vanish = false;
  bool ideal_stable = false;
  bool residue_action_trivial = false;
  bool invariants_trivial = false;
  bool all_ok = false;
};

InseparableDemoReport inseparable_demo();

}  // namespace splitalg
