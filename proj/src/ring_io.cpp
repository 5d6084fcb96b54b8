#include <cctype>
#include <sstream>

#include "ring_detail.hpp"
#include "splitalg/ring.hpp"

namespace splitalg {

using detail::is_quot_like;
using detail::payload_coeff_ring;

// ---- rendering ----------------------------------------------------------------

namespace {

bool needs_term_parens(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return false;
  if (s.find('+') != std::string::npos) return true;
  return s.find('-', 1) != std::string::npos;
}

bool needs_frac_parens(const std::string& s) {
  return s.find_first_of("+*/") != std::string::npos ||
         s.find('-', 1) != std::string::npos;
}

std::string render_monomial(const std::vector<int>& mono,
                            const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (mono[i] != 1) out += "^" + std::to_string(mono[i]);
  }
  return out;
}

}  // namespace

namespace detail {

std::string render_terms(const MultiPoly::Terms& terms, const RingHandle& coeffR,
                         const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms) {
    std::string cs = coeffR->to_string(c);
    std::string ms = render_monomial(mono, names);
    std::string piece;
    if (ms.empty())
      piece = cs;
    else if (cs == "1")
      piece = ms;
    else if (cs == "-1")
      piece = "-" + ms;
    else if (needs_term_parens(cs))
      piece = "(" + cs + ")*" + ms;
    else
      piece = cs + "*" + ms;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace detail

using detail::render_terms;

std::string Ring::to_string(const RingElem& a) const {
  check_internal(a.valid(), "uninitialized element");
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
      return a.as_int().get_str();
    case RingKind::Rationals:
      return a.as_rat().get_str();
    case RingKind::PolyRing:
      return render_terms(a.as_poly().terms, base_, vars_);
    case RingKind::QuotientRing:
    case RingKind::FiniteField:
      return render_terms(a.as_poly().terms, payload_coeff_ring(*this),
                          inner_poly_->vars());
    case RingKind::FractionField: {
      const auto& f = a.as_frac();
      std::string num = inner_poly_->to_string(f.num);
      if (inner_poly_->is_one(f.den)) return num;
      std::string den = inner_poly_->to_string(f.den);
      if (needs_frac_parens(num)) num = "(" + num + ")";
      if (needs_frac_parens(den)) den = "(" + den + ")";
      return num + "/" + den;
    }
    case RingKind::Product: {
      std::string out = "(";
      const auto& parts = a.as_prod().parts;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += factors_[i]->to_string(parts[i]);
      }
      return out + ")";
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

// ---- variable visibility --------------------------------------------------------

std::map<std::string, RingElem> Ring::var_table() const {
  std::map<std::string, RingElem> out;
  switch (kind_) {
    case RingKind::PolyRing: {
      for (const auto& v : vars_) out.emplace(v, var_elem(v));
      for (const auto& [name, el] : base_->var_table())
        out.emplace(name, embed(el));  // emplace keeps own vars on collision
      return out;
    }
    case RingKind::FractionField:
    case RingKind::QuotientRing:
    case RingKind::FiniteField: {
      for (const auto& [name, el] : inner_poly_->var_table())
        out.emplace(name, embed(el));
      return out;
    }
    default:
      return out;
  }
}

// ---- element parser ---------------------------------------------------------------

namespace {

class ElemParser {
public:
  ElemParser(const RingHandle& R, const std::string& text)
      : R_(R), text_(text), vars_(R->var_table()) {}

  RingElem run() {
    RingElem v = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(Err::MalformedSpec, "unexpected trailing input at '" + rest() + "'");
    return v;
  }

private:
  RingElem expr() {
    RingElem v = term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        v = R_->add(v, term());
      } else if (eat('-')) {
        v = R_->sub(v, term());
      } else {
        return v;
      }
    }
  }

  RingElem term() {
    RingElem v = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        v = R_->mul(v, factor());
      } else if (eat('/')) {
        v = R_->mul(v, R_->inv(factor()));
      } else {
        return v;
      }
    }
  }

  RingElem factor() {
    skip_ws();
    if (eat('-')) return R_->neg(factor());
    RingElem v = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty())
        fail(Err::MalformedSpec, "exponent must be a nonnegative integer at '" + rest() + "'");
      v = R_->pow(v, mpz_class(digits));
    }
    return v;
  }

  RingElem atom() {
    skip_ws();
    if (eat('(')) {
      RingElem v = expr();
      skip_ws();
      if (!eat(')')) fail(Err::MalformedSpec, "missing ')' at '" + rest() + "'");
      return v;
    }
    std::string digits = read_digits();
    if (!digits.empty()) return R_->from_int(mpz_class(digits));
    std::string ident = read_identifier();
    if (!ident.empty()) {
      auto it = vars_.find(ident);
      if (it == vars_.end())
        fail(Err::MalformedSpec, "unknown symbol '" + ident + "' in " + R_->spec_string());
      return it->second;
    }
    fail(Err::MalformedSpec, "expected a value at '" + rest() + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string read_digits() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::string read_identifier() {
    size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  std::string rest() const {
    return text_.substr(pos_, std::min<size_t>(24, text_.size() - pos_));
  }

  RingHandle R_;
  const std::string& text_;
  size_t pos_ = 0;
  std::map<std::string, RingElem> vars_;
};

}  // namespace

RingElem Ring::parse(const std::string& text) const {
  return ElemParser(shared_from_this(), text).run();
}

// ---- ring specs ---------------------------------------------------------------------

std::string Ring::spec_string() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::IntegersMod:
      return "Zmod(" + mod_int_.get_str() + ")";
    case RingKind::PrimeField:
      return "Fp(" + mod_int_.get_str() + ")";
    case RingKind::FiniteField: {
      std::string head = "GF(" + mod_int_.get_str() + "," + std::to_string(ff_degree_);
      uni::Dense canonical = uni::least_irreducible(inner_poly_->base(), ff_degree_);
      if (uni::eq(inner_poly_->base(), canonical, modulus_dense_)) return head + ")";
      return head + "," + inner_poly_->to_string(*modulus_poly_) + ")";
    }
    case RingKind::PolyRing: {
      std::string out = "Poly(" + base_->spec_string() + "; ";
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i];
      }
      return out + ")";
    }
    case RingKind::FractionField:
      return "Frac(" + inner_poly_->spec_string() + ")";
    case RingKind::QuotientRing:
      return "Quot(" + inner_poly_->spec_string() + ", " +
             inner_poly_->to_string(*modulus_poly_) + ")";
    case RingKind::Product: {
      std::string out = "Prod(";
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ", ";
        out += factors_[i]->spec_string();
      }
      return out + ")";
    }
  }
  fail(Err::InternalInvariantViolation, "unreachable ring kind");
}

namespace {

class SpecParser {
public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  RingHandle run() {
    RingHandle r = ring();
    skip_ws();
    if (pos_ != text_.size())
      fail(Err::MalformedSpec, "unexpected trailing input in ring spec at '" + rest() + "'");
    return r;
  }

private:
  RingHandle ring() {
    skip_ws();
    std::string head = read_identifier();
    if (head == "Z") return Ring::integers();
    if (head == "Q") return Ring::rationals();
    if (head == "Zmod") {
      expect('(');
      mpz_class m = integer();
      expect(')');
      return Ring::integers_mod(m);
    }
    if (head == "Fp") {
      expect('(');
      mpz_class p = integer();
      expect(')');
      return Ring::prime_field(p);
    }
    if (head == "GF") {
      expect('(');
      mpz_class p = integer();
      expect(',');
      mpz_class k = integer();
      if (!k.fits_sint_p() || k < 1)
        fail(Err::MalformedSpec, "GF degree out of range");
      skip_ws();
      if (eat(',')) {
        std::string mod_text = balanced_until(')');
        expect(')');
        RingHandle P = Ring::poly_ring(Ring::prime_field(p), {"x"});
        return Ring::finite_field(p, static_cast<int>(k.get_si()), P->parse(mod_text));
      }
      expect(')');
      return Ring::finite_field(p, static_cast<int>(k.get_si()));
    }
    if (head == "Poly") {
      expect('(');
      RingHandle base = ring();
      expect(';');
      std::vector<std::string> vars;
      for (;;) {
        skip_ws();
        std::string v = read_identifier();
        if (v.empty()) fail(Err::MalformedSpec, "expected a variable name at '" + rest() + "'");
        vars.push_back(v);
        skip_ws();
        if (!eat(',')) break;
      }
      expect(')');
      return Ring::poly_ring(std::move(base), std::move(vars));
    }
    if (head == "Frac") {
      expect('(');
      RingHandle inner = ring();
      expect(')');
      return Ring::fraction_field(std::move(inner));
    }
    if (head == "Quot") {
      expect('(');
      RingHandle inner = ring();
      expect(',');
      std::string mod_text = balanced_until(')');
      expect(')');
      return Ring::quotient_ring(inner, inner->parse(mod_text));
    }
    if (head == "Prod") {
      expect('(');
      std::vector<RingHandle> factors;
      factors.push_back(ring());
      skip_ws();
      while (eat(',')) factors.push_back(ring());
      expect(')');
      return Ring::product(std::move(factors));
    }
    fail(Err::MalformedSpec, "unknown ring constructor '" + head + "'");
  }

  mpz_class integer() {
    skip_ws();
    bool negate = eat('-');
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail(Err::MalformedSpec, "expected an integer at '" + rest() + "'");
    mpz_class v(text_.substr(start, pos_ - start));
    return negate ? mpz_class(-v) : v;
  }

  // Raw text up to the matching close of the current nesting level; used for
  // embedded polynomial arguments, which the element parser handles itself.
  std::string balanced_until(char close) {
    skip_ws();
    size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && depth == 0) break;
      if (c == ')') --depth;
      ++pos_;
    }
    if (pos_ == text_.size())
      fail(Err::MalformedSpec, std::string("missing '") + close + "' in ring spec");
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!eat(c))
      fail(Err::MalformedSpec, std::string("expected '") + c + "' at '" + rest() + "'");
  }
  std::string read_identifier() {
    size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  std::string rest() const {
    return text_.substr(pos_, std::min<size_t>(24, text_.size() - pos_));
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

RingHandle Ring::parse_spec(const std::string& spec) {
  return SpecParser(spec).run();
}

}  // namespace splitalg
