#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "splitalg/ring.hpp"

using namespace splitalg;

TEST_CASE("integers and rationals") {
  auto Z = Ring::integers();
  auto Q = Ring::rationals();
  CHECK(Z->to_string(Z->from_int(-5)) == "-5");
  CHECK(Z->from_int(21) == Z->mul(Z->from_int(3), Z->from_int(7)));
  CHECK(Q->parse("2/3 + 1/6").str() == "5/6");
  CHECK(Q->inv(Q->parse("-3/4")).str() == "-4/3");
  CHECK(Z->is_unit(Z->from_int(-1)));
  CHECK(!Z->is_unit(Z->from_int(2)));
  CHECK(!Z->cardinality());
  CHECK(Z->is_integral_domain());
}

TEST_CASE("prime fields") {
  auto F5 = Ring::prime_field(5);
  CHECK(F5->parse("3*4").str() == "2");
  CHECK(F5->inv(F5->from_int(3)).str() == "2");
  CHECK(F5->finite_cardinality() == 5);
  CHECK(F5->is_field());
  CHECK_THROWS_AS((void)Ring::prime_field(6), SplitError);
}

TEST_CASE("residue rings expose zero divisors with witnesses") {
  auto Z12 = Ring::integers_mod(12);
  auto reg = Z12->is_regular(Z12->from_int(4));
  REQUIRE(reg.verdict == Reg::ZeroDivisor);
  CHECK(Z12->mul(Z12->from_int(4), *reg.witness).is_zero());
  CHECK_FALSE(reg.witness->is_zero());
  CHECK(Z12->is_regular(Z12->from_int(5)).verdict == Reg::Regular);
  CHECK(Z12->is_unit(Z12->from_int(5)));
  CHECK(!Z12->is_field());
}

TEST_CASE("finite field towers") {
  auto G4 = Ring::finite_field(2, 2);
  auto g = G4->generator();
  CHECK(G4->mul(g, g).str() == "x + 1");
  CHECK(G4->finite_cardinality() == 4);
  CHECK(G4->is_field());

  auto GF9 = Ring::parse_spec("GF(3,2)");
  CHECK(GF9->finite_cardinality() == 9);
  CHECK(GF9->spec_string() == "GF(3,2)");

  // GF(p,1) collapses onto the prime field handle
  auto GF5 = Ring::parse_spec("GF(5,1)");
  CHECK(GF5->same(*Ring::prime_field(5)));

  // every element enumerable exactly once
  auto F8 = Ring::finite_field(2, 3);
  std::set<std::string> seen;
  for (int i = 0; i < 8; ++i) seen.insert(F8->element_at(i).str());
  CHECK(seen.size() == 8);
}

TEST_CASE("multivariate polynomial rings") {
  auto Q = Ring::rationals();
  auto P = Ring::poly_ring(Q, {"x", "y"});
  CHECK(P->parse("(x+y)^2 - (x-y)^2").str() == "4*x*y");
  CHECK(P->is_integral_domain());
  CHECK(!P->is_field());
  CHECK(P->vars() == std::vector<std::string>{"x", "y"});

  // units over a non-reduced base: 1 + 2x inverts mod 4
  auto P4 = Ring::parse_spec("Poly(Zmod(4); x)");
  auto inv = P4->try_inv(P4->parse("1 + 2*x"));
  REQUIRE(inv);
  CHECK(P4->mul(*inv, P4->parse("1+2*x")).is_one());
  CHECK(!P4->try_inv(P4->parse("1 + x")));
}

TEST_CASE("quotient rings certify fields and track nilpotents") {
  auto D = Ring::parse_spec("Quot(Poly(Fp(2); u), u^2)");
  auto u = D->parse("u");
  CHECK(D->mul(u, u).is_zero());
  auto reg = D->is_regular(u);
  REQUIRE(reg.verdict == Reg::ZeroDivisor);
  CHECK(D->mul(u, *reg.witness).is_zero());
  CHECK(D->is_unit(D->parse("1+u")));
  CHECK(D->mul(D->parse("1+u"), D->inv(D->parse("1+u"))).is_one());
  CHECK(D->finite_cardinality() == 4);
  CHECK(!D->is_field());

  // field certification is only decided over finite bases; arithmetic in
  // Quot towers over Q still inverts everything coprime to the modulus
  auto K = Ring::parse_spec("Quot(Poly(Q; t), t^2 - 2)");
  auto r2 = K->generator();
  CHECK(K->is_regular(r2).verdict == Reg::Regular);
  CHECK(K->mul(r2, r2).str() == "2");
  CHECK(K->inv(r2) == K->mul(r2, K->parse("1/2")));

  // reducible modulus over a field is a ring, not a field
  auto R = Ring::parse_spec("Quot(Poly(Fp(3); v), v^2 - 1)");
  CHECK(!R->is_field());
  CHECK(R->finite_cardinality() == 9);
}

TEST_CASE("fraction fields of univariate polynomial rings") {
  auto FS = Ring::parse_spec("Frac(Poly(Fp(3); s))");
  auto frac = FS->parse("(s+1)/(s^2)");
  CHECK(FS->mul(frac, FS->parse("s^2")).str() == "s + 1");
  CHECK(FS->inv(frac).str() == "s^2/(s + 1)");
  CHECK(FS->is_field());
  CHECK(!FS->cardinality());
}

TEST_CASE("product rings work componentwise") {
  auto Pr = Ring::parse_spec("Prod(Fp(2), Fp(3))");
  auto e = Pr->tuple({Ring::prime_field(2)->from_int(1),
                      Ring::prime_field(3)->from_int(0)});
  CHECK(Pr->mul(e, e) == e);
  CHECK(Pr->is_regular(e).verdict == Reg::ZeroDivisor);
  CHECK(Pr->finite_cardinality() == 6);
  CHECK(!Pr->is_unit(Pr->add(e, Pr->one())));
}

TEST_CASE("spec strings round trip") {
  for (std::string s :
       {"Z", "Q", "Zmod(12)", "Fp(7)", "GF(2,4)", "Poly(Q; x, y)",
        "Frac(Poly(Fp(3); s))", "Quot(Poly(Q; t), t^2 - 2)",
        "Prod(Fp(2), Fp(3))"}) {
    auto R = Ring::parse_spec(s);
    auto R2 = Ring::parse_spec(R->spec_string());
    CHECK(R->same(*R2));
  }
  CHECK_THROWS_AS((void)Ring::parse_spec("Nope(3)"), SplitError);
  CHECK_THROWS_AS((void)Ring::parse_spec("Fp(4)"), SplitError);
  CHECK_THROWS_AS((void)Ring::parse_spec("GF(2,0)"), SplitError);
}

TEST_CASE("arithmetic axioms hold on random draws") {
  std::mt19937 rng(20250819);
  for (const char* spec : {"Zmod(12)", "Fp(7)", "GF(2,3)",
                           "Quot(Poly(Fp(2); u), u^2)", "Prod(Fp(2), Fp(3))"}) {
    auto R = Ring::parse_spec(spec);
    unsigned long card = R->finite_cardinality().get_ui();
    std::uniform_int_distribution<unsigned long> pick(0, card - 1);
    for (int trial = 0; trial < 50; ++trial) {
      auto a = R->element_at(pick(rng));
      auto b = R->element_at(pick(rng));
      auto c = R->element_at(pick(rng));
      CHECK(R->add(a, b) == R->add(b, a));
      CHECK(R->mul(a, b) == R->mul(b, a));
      CHECK(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)));
      CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
      CHECK(R->sub(a, a).is_zero());
      CHECK(R->mul(a, R->one()) == a);
      if (auto inv = R->try_inv(a)) CHECK(R->mul(a, *inv).is_one());
    }
  }
}

TEST_CASE("element text parses back to the element") {
  for (const char* spec : {"Zmod(9)", "GF(3,2)", "Quot(Poly(Fp(2); u), u^3)"}) {
    auto R = Ring::parse_spec(spec);
    unsigned long card = R->finite_cardinality().get_ui();
    for (unsigned long i = 0; i < card; ++i) {
      auto x = R->element_at(i);
      CHECK(R->parse(R->to_string(x)) == x);
    }
  }
}
