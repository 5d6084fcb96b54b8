#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splitalg/error.hpp"

namespace splitalg {

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

struct MultiPoly;
struct FracPayload;
struct ProdPayload;

/// One element of a commutative ring, tagged with the ring that owns it.
/// Elements are immutable values; all arithmetic goes through the owner so
/// every result is in canonical form (residues reduced, polynomials with no
/// zero terms, fractions with monic denominator and trivial gcd).
class RingElem {
public:
  using Payload = std::variant<mpz_class, mpq_class,
                               std::shared_ptr<const MultiPoly>,
                               std::shared_ptr<const FracPayload>,
                               std::shared_ptr<const ProdPayload>>;

  RingElem() = default;
  RingElem(RingHandle owner, Payload payload)
      : owner_(std::move(owner)), payload_(std::move(payload)) {}

  const RingHandle& owner() const { return owner_; }
  const Payload& payload() const { return payload_; }
  bool valid() const { return owner_ != nullptr; }

  const mpz_class& as_int() const { return std::get<mpz_class>(payload_); }
  const mpq_class& as_rat() const { return std::get<mpq_class>(payload_); }
  const MultiPoly& as_poly() const;
  const FracPayload& as_frac() const;
  const ProdPayload& as_prod() const;

  // Convenience forwarders; both operands must share a ring.
  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

private:
  RingHandle owner_;
  Payload payload_;
};

/// Sparse multivariate polynomial over the base ring of some PolyRing.
/// Keys are exponent vectors (one slot per declared variable); the map is
/// ordered by descending pure lexicographic order so iteration starts at the
/// leading term.  Canonical form: no zero coefficients stored.
struct MultiPoly {
  struct LexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
      return a > b;
    }
  };
  using Terms = std::map<std::vector<int>, RingElem, LexDesc>;
  Terms terms;
};

struct FracPayload {
  RingElem num;  // element of the inner PolyRing
  RingElem den;  // monic, gcd(num, den) = 1
};

struct ProdPayload {
  std::vector<RingElem> parts;  // one per product factor
};

enum class RingKind {
  Integers,
  Rationals,
  IntegersMod,
  PrimeField,
  FiniteField,
  PolyRing,
  FractionField,
  QuotientRing,
  Product,
};

enum class Reg { Regular, ZeroDivisor, Unknown };

/// Tri-state regularity verdict.  A ZeroDivisor verdict always carries a
/// nonzero witness y with x*y = 0; zero itself gets witness 1.
struct Regularity {
  Reg verdict;
  std::optional<RingElem> witness;
};

/// A commutative ring with exactly computable arithmetic.  Immutable once
/// constructed; shared by handle.  Construction validates its own invariants
/// (prime moduli, irreducible GF moduli, field bases where required).
class Ring : public std::enable_shared_from_this<Ring> {
public:
  // ---- construction --------------------------------------------------------
  static RingHandle integers();
  static RingHandle rationals();
  static RingHandle integers_mod(const mpz_class& m);           // m >= 2
  static RingHandle prime_field(const mpz_class& p);            // p prime
  // GF(p, k): modulus defaults to the lexicographically least monic
  // irreducible of degree k over F_p.  k = 1 normalizes to prime_field(p).
  static RingHandle finite_field(const mpz_class& p, int k);
  static RingHandle finite_field(const mpz_class& p, int k, const RingElem& modulus);
  static RingHandle poly_ring(RingHandle base, std::vector<std::string> vars);
  static RingHandle fraction_field(RingHandle univar_poly_over_field);
  static RingHandle quotient_ring(RingHandle univar_poly_over_field, const RingElem& monic_modulus);
  static RingHandle product(std::vector<RingHandle> factors);

  /// Ring-spec grammar:
  ///   Z | Q | Zmod(m) | Fp(p) | GF(p,k) | Poly(ring; v[,v]*) | Frac(ring)
  ///   | Quot(ring, monic poly)
  static RingHandle parse_spec(const std::string& spec);

  // ---- identity / metadata -------------------------------------------------
  RingKind kind() const { return kind_; }
  bool same(const Ring& o) const;  // structural equality
  std::string spec_string() const;
  const mpz_class& characteristic() const { return characteristic_; }
  const std::optional<mpz_class>& cardinality() const { return cardinality_; }
  bool is_field() const { return field_; }            // certified only
  bool is_integral_domain() const { return domain_; } // certified only

  // kind-specific accessors (throw InternalInvariantViolation on misuse)
  const mpz_class& modulus_int() const;        // IntegersMod/PrimeField/FiniteField
  int ff_degree() const;                       // FiniteField
  const RingHandle& base() const;              // PolyRing coefficient ring
  const std::vector<std::string>& vars() const;  // PolyRing
  const RingHandle& inner_poly() const;        // FractionField/QuotientRing/FiniteField
  const RingElem& modulus_poly() const;        // QuotientRing/FiniteField
  const std::vector<RingElem>& modulus_dense() const;  // cached dense modulus
  const std::vector<RingHandle>& factors() const;  // Product

  // ---- element construction -------------------------------------------------
  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(const mpz_class& z) const;
  RingElem from_int(long z) const { return from_int(mpz_class(z)); }
  /// Lift an element of the structural base into this ring (constant
  /// polynomial, fraction with denominator 1, quotient-ring class, ...).
  RingElem embed(const RingElem& base_elem) const;
  /// PolyRing: the monomial var^1 for a declared variable.
  RingElem var_elem(const std::string& name) const;
  /// QuotientRing/FiniteField: the class of the generator variable.
  RingElem generator() const;
  /// Product: assemble from per-factor parts.
  RingElem tuple(std::vector<RingElem> parts) const;
  /// Product: one component of an element.
  RingElem component(const RingElem& x, size_t i) const;

  // ---- arithmetic ------------------------------------------------------------
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem pow(const RingElem& a, const mpz_class& e) const;  // e >= 0
  bool eq(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;
  bool is_one(const RingElem& a) const;
  /// Canonical total order on elements (for deterministic sorting/dedup).
  int cmp(const RingElem& a, const RingElem& b) const;

  // ---- units / regularity / enumeration ---------------------------------------
  /// Exact for fields, IntegersMod, finite rings and quotient rings over a
  /// field; UndecidableForRing otherwise.
  bool is_unit(const RingElem& a) const;
  RingElem inv(const RingElem& a) const;  // NotAUnit if no inverse
  std::optional<RingElem> try_inv(const RingElem& a) const;
  Regularity is_regular(const RingElem& a) const;

  /// Finite rings only: canonical enumeration by index, 0 <= i < |A|.
  RingElem element_at(const mpz_class& index) const;
  mpz_class finite_cardinality() const;  // InfiniteRing if unbounded

  // ---- text ------------------------------------------------------------------
  std::string to_string(const RingElem& a) const;
  /// Element grammar: integer literals, declared variables (own and inherited
  /// from the coefficient tower), + - * / ^ and parentheses.  Division is
  /// multiplication by an inverse and requires the divisor to be a unit.
  RingElem parse(const std::string& text) const;
  /// All variables visible to the element parser, outermost shadowing.
  std::map<std::string, RingElem> var_table() const;

  ~Ring() = default;

private:
  Ring() = default;
  friend struct RingBuilder;

  void require_kind(RingKind k) const;

  RingKind kind_{};
  mpz_class characteristic_{0};
  std::optional<mpz_class> cardinality_;
  bool field_ = false;
  bool domain_ = false;

  mpz_class mod_int_;                    // IntegersMod/PrimeField/FiniteField(p)
  int ff_degree_ = 0;                    // FiniteField(k)
  RingHandle base_;                      // PolyRing base
  std::vector<std::string> vars_;        // PolyRing vars
  RingHandle inner_poly_;                // Frac/Quot/FiniteField inner PolyRing
  std::optional<RingElem> modulus_poly_; // Quot/FiniteField
  std::vector<RingElem> modulus_dense_;  // Quot/FiniteField, cached
  std::vector<RingHandle> factors_;      // Product
};

/// Structural ring equality through handles.
bool same_ring(const RingHandle& a, const RingHandle& b);

/// Throws ElementRingMismatch unless both elements live in structurally equal
/// rings.
void require_same_ring(const RingElem& a, const RingElem& b);

}  // namespace splitalg
