#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "splitalg/factor.hpp"
#include "splitalg/monic_poly.hpp"

using namespace splitalg;

namespace {

uni::Dense parse_dense(const RingHandle& R, const std::string& text) {
  MonicPoly f = parse_monic(R, text);
  return f.coeffs;
}

}  // namespace

TEST_CASE("dense arithmetic and division") {
  auto Q = Ring::rationals();
  auto a = parse_dense(Q, "t^3 - 2*t + 5");
  auto b = parse_dense(Q, "t - 1");
  auto dr = uni::divrem(Q, a, b);
  CHECK(uni::deg(dr.quot) == 2);
  // remainder = a(1)
  CHECK(uni::eq(Q, dr.rem, uni::constant(Q, Q->from_int(4))));
  CHECK(uni::eq(Q, uni::add(Q, uni::mul(Q, dr.quot, b), dr.rem), a));

  auto prod = uni::mul(Q, b, b);
  CHECK(uni::eq(Q, uni::div_exact(Q, prod, b), b));
  CHECK_THROWS_AS((void)uni::div_exact(Q, a, b), SplitError);

  CHECK(uni::deg(uni::zero()) == -1);
  CHECK(uni::is_zero(uni::sub(Q, a, a)));
}

TEST_CASE("gcd and extended gcd over fields") {
  auto F7 = Ring::prime_field(7);
  auto a = parse_dense(F7, "t^2 - 1");
  auto b = parse_dense(F7, "t^2 - 2*t + 1");  // (t-1)^2
  auto g = uni::gcd(F7, a, b);
  CHECK(uni::to_string(F7, g, "t") == "t + 6");

  auto e = uni::ext_gcd(F7, a, b);
  auto lhs = uni::add(F7, uni::mul(F7, e.u, a), uni::mul(F7, e.v, b));
  CHECK(uni::eq(F7, lhs, e.g));
  CHECK(uni::eq(F7, e.g, g));

  // coprime pair certifies with a unit combination
  auto c = parse_dense(F7, "t + 3");
  auto e2 = uni::ext_gcd(F7, a, c);
  CHECK(uni::deg(e2.g) == 0);
}

TEST_CASE("derivatives and evaluation") {
  auto Z = Ring::integers();
  auto f = parse_dense(Z, "t^4 + 3*t^2 - 2*t + 1");
  auto df = uni::derivative(Z, f);
  CHECK(uni::to_string(Z, df, "t") == "4*t^3 + 6*t - 2");
  CHECK(uni::eval(Z, f, Z->from_int(2)) == Z->from_int(25));

  // derivative loses degree in small characteristic
  auto F2 = Ring::prime_field(2);
  auto g = parse_dense(F2, "t^2 + 1");
  CHECK(uni::is_zero(uni::derivative(F2, g)));
}

TEST_CASE("irreducibility over finite fields") {
  auto F2 = Ring::prime_field(2);
  CHECK(uni::irreducible_mod(F2, parse_dense(F2, "t^2 + t + 1")));
  CHECK(!uni::irreducible_mod(F2, parse_dense(F2, "t^2 + 1")));
  CHECK(uni::irreducible_mod(F2, parse_dense(F2, "t^4 + t + 1")));

  // least irreducible is deterministic and actually least
  auto l2 = uni::least_irreducible(F2, 2);
  CHECK(uni::to_string(F2, l2, "t") == "t^2 + t + 1");
  auto F3 = Ring::prime_field(3);
  auto l3 = uni::least_irreducible(F3, 2);
  CHECK(uni::irreducible_mod(F3, l3));
  CHECK(uni::deg(l3) == 2);
}

TEST_CASE("finite field factorization is complete and canonical") {
  auto F5 = Ring::prime_field(5);
  auto f = parse_dense(F5, "(t^2 + 2) * (t - 1)^2 * t");
  auto facs = factor_finite_field(F5, f);
  REQUIRE(facs.size() == 3);
  // sorted by degree, multiplicities recovered
  uni::Dense rebuilt = uni::constant(F5, F5->one());
  int total = 0;
  for (const auto& [g, m] : facs) {
    CHECK(uni::irreducible_mod(F5, g));
    for (int i = 0; i < m; ++i) rebuilt = uni::mul(F5, rebuilt, g);
    total += m * uni::deg(g);
  }
  CHECK(total == 5);
  CHECK(uni::eq(F5, rebuilt, f));

  // byte-identical on repeat runs
  auto facs2 = factor_finite_field(F5, f);
  REQUIRE(facs2.size() == facs.size());
  for (size_t i = 0; i < facs.size(); ++i) {
    CHECK(uni::eq(F5, facs[i].poly, facs2[i].poly));
    CHECK(facs[i].multiplicity == facs2[i].multiplicity);
  }
}

TEST_CASE("random factorization round trips") {
  std::mt19937 rng(424243);
  for (int p : {2, 3, 5}) {
    auto K = Ring::prime_field(p);
    std::uniform_int_distribution<int> coeff(0, p - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<RingElem> c;
      for (int i = 0; i < 5; ++i) c.push_back(K->from_int(coeff(rng)));
      c.push_back(K->one());
      auto f = uni::trim(K, c);
      auto facs = factor_finite_field(K, f);
      uni::Dense rebuilt = uni::constant(K, K->one());
      for (const auto& [g, m] : facs)
        for (int i = 0; i < m; ++i) rebuilt = uni::mul(K, rebuilt, g);
      CHECK(uni::eq(K, rebuilt, f));
    }
  }
}

TEST_CASE("squarefree part and separability") {
  auto F3 = Ring::prime_field(3);
  auto f = parse_dense(F3, "(t - 1)^2 * (t + 1)");
  CHECK(!is_separable_poly(F3, f));
  auto sf = squarefree_part(F3, f);
  CHECK(uni::eq(F3, sf, parse_dense(F3, "t^2 - 1")));
  CHECK(is_separable_poly(F3, sf));

  // t^9 - t is separable even though its degree kills the derivative naively
  CHECK(is_separable_poly(F3, parse_dense(F3, "t^9 - t")));
  CHECK(!is_separable_poly(F3, parse_dense(F3, "t^3 - 1")));
}

TEST_CASE("roots in the field with multiplicities") {
  auto F5 = Ring::prime_field(5);
  auto f = parse_dense(F5, "(t - 1)^2 * (t - 3) * (t^2 + 2)");
  auto roots = field_roots(F5, f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == F5->from_int(1));
  CHECK(roots[0].second == 2);
  CHECK(roots[1].first == F5->from_int(3));
  CHECK(roots[1].second == 1);

  // t^2 + 1 over GF(3,2) has the two generator roots
  auto G9 = Ring::finite_field(3, 2);
  auto g = parse_dense(G9, "t^2 + 1");
  auto r9 = field_roots(G9, g);
  REQUIRE(r9.size() == 2);
  for (const auto& [r, m] : r9) {
    CHECK(m == 1);
    CHECK(G9->add(G9->mul(r, r), G9->one()).is_zero());
  }
}

TEST_CASE("monic wrapper validates and prints canonically") {
  auto Z = Ring::integers();
  MonicPoly f = parse_monic(Z, "t^3 - 2*t + 1");
  CHECK(f.degree() == 3);
  CHECK(monic_to_string(f) == "t^3 - 2*t + 1");
  CHECK(monic_eq(f, parse_monic(Z, monic_to_string(f))));

  CHECK_THROWS_AS((void)parse_monic(Z, "2*t^2 + 1"), SplitError);
  CHECK_THROWS_AS((void)make_monic(Z, {Z->from_int(1), Z->from_int(2)}),
                  SplitError);

  // signed view coefficients: t^n - e1 t^{n-1} + ... +- en
  auto e1 = signed_coefficient(f, 1);
  auto e3 = signed_coefficient(f, 3);
  CHECK(e1 == Z->from_int(0));
  CHECK(e3 == Z->from_int(-1));
  std::vector<RingElem> es{e1, signed_coefficient(f, 2), e3};
  CHECK(monic_eq(monic_from_signed(Z, es), f));
}

TEST_CASE("synthetic division peels linear factors") {
  auto Q = Ring::rationals();
  MonicPoly f = parse_monic(Q, "(t - 2) * (t^2 + 1)");
  auto sd = synthetic_divide(f, Q->from_int(2));
  CHECK(sd.remainder.is_zero());
  CHECK(monic_to_string(sd.quotient) == "t^2 + 1");

  auto sd2 = synthetic_divide(f, Q->from_int(1));
  CHECK(sd2.remainder == eval_monic(f, Q->from_int(1)));
  CHECK(sd2.remainder == Q->from_int(-2));
}

TEST_CASE("monic product and evaluation agree with ring arithmetic") {
  auto F7 = Ring::prime_field(7);
  MonicPoly a = parse_monic(F7, "t^2 + 3*t + 1");
  MonicPoly b = parse_monic(F7, "t + 5");
  MonicPoly ab = monic_mul(a, b);
  CHECK(ab.degree() == 3);
  for (int x = 0; x < 7; ++x) {
    auto v = F7->from_int(x);
    CHECK(eval_monic(ab, v) == F7->mul(eval_monic(a, v), eval_monic(b, v)));
  }
  auto dc = derivative_coeffs(a);
  CHECK(dc.size() == 2);
  CHECK(dc[0] == F7->from_int(3));
  CHECK(dc[1] == F7->from_int(2));
}

TEST_CASE("monic parsing resolves base ring constants") {
  auto D = Ring::parse_spec("Quot(Poly(Fp(2); u), u^2)");
  MonicPoly f = parse_monic(D, "t^2 - u*t + 1");
  CHECK(f.plain(1) == D->neg(D->parse("u")));
  CHECK(f.plain(0).is_one());

  auto FS = Ring::parse_spec("Frac(Poly(Fp(3); s))");
  MonicPoly g = parse_monic(FS, "t^3 - s");
  CHECK(g.plain(0) == FS->neg(FS->parse("s")));
}
