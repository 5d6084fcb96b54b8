#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "splitalg/oracles.hpp"

using namespace splitalg;

TEST_CASE("resultant discriminants match known values") {
  auto Q = Ring::rationals();
  auto Z = Ring::integers();
  CHECK(Q->to_string(resultant_discriminant(parse_monic(Q, "t^2 + 1"))) == "-4");
  CHECK(Q->to_string(resultant_discriminant(parse_monic(Q, "t^2 - 3*t + 2"))) == "1");
  CHECK(Z->to_string(resultant_discriminant(parse_monic(Z, "t^3 - 2"))) == "-108");
  CHECK(Q->to_string(resultant_discriminant(parse_monic(Q, "t + 5"))) == "1");
  CHECK(Z->to_string(resultant_discriminant(parse_monic(Z, "t^4 - 1"))) == "-256");
}

TEST_CASE("generic depressed cubic discriminant") {
  auto P = Ring::poly_ring(Ring::rationals(), {"p", "q"});
  MonicPoly f = parse_monic(P, "t^3 + p*t + q");
  CHECK(P->eq(resultant_discriminant(f), P->parse("-4*p^3 - 27*q^2")));

  OracleReport rep = check_discriminant(f);
  CHECK(rep.agree);
  CHECK(rep.oracle_value == rep.main_value);
  CHECK(rep.name == "discriminant");
}

TEST_CASE("derivative degree drops in small characteristic are handled") {
  auto F2 = Ring::prime_field(2);
  CHECK(F2->to_string(resultant_discriminant(parse_monic(F2, "t^2 + t + 1"))) == "1");
  CHECK(F2->is_zero(resultant_discriminant(parse_monic(F2, "t^2 + 1"))));
  CHECK(check_discriminant(parse_monic(F2, "t^3 + t + 1")).agree);

  auto F3 = Ring::prime_field(3);
  CHECK(F3->is_zero(resultant_discriminant(parse_monic(F3, "t^3 - 1"))));
  CHECK(F3->is_zero(resultant_discriminant(parse_monic(F3, "t^3 - t^2"))));
}

TEST_CASE("both discriminant routes agree on random inputs") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> c(-3, 3);
  auto Z = Ring::integers();
  auto F5 = Ring::prime_field(5);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<RingElem> zc, fc;
      for (int k = 0; k < n; ++k) {
        int v = c(rng);
        zc.push_back(Z->from_int(v));
        fc.push_back(F5->from_int(v));
      }
      zc.push_back(Z->one());
      fc.push_back(F5->one());
      CHECK(check_discriminant(make_monic(Z, zc)).agree);
      CHECK(check_discriminant(make_monic(F5, fc)).agree);
    }
  }
}

TEST_CASE("leading-monomial elimination reduces power sums") {
  auto Q = Ring::rationals();
  auto P2 = Ring::poly_ring(Q, {"t1", "t2"});
  RingElem h = P2->parse("t1^2 + t2^2");
  SymmetricReduction r = gauss_symmetric_reduction(h);
  CHECK(r.e_ring->eq(r.expression, r.e_ring->parse("e1^2 - 2*e2")));
  CHECK(check_symmetric_reduction(h).agree);

  auto P3 = Ring::poly_ring(Q, {"t1", "t2", "t3"});
  RingElem h3 = P3->parse("t1^3 + t2^3 + t3^3");
  SymmetricReduction r3 = gauss_symmetric_reduction(h3);
  CHECK(r3.e_ring->eq(r3.expression, r3.e_ring->parse("e1^3 - 3*e1*e2 + 3*e3")));
  CHECK(check_symmetric_reduction(h3).agree);

  RingElem e2 = P3->parse("t1*t2 + t1*t3 + t2*t3");
  SymmetricReduction re = gauss_symmetric_reduction(e2);
  CHECK(re.e_ring->eq(re.expression, re.e_ring->parse("e2")));
  CHECK(check_symmetric_reduction(e2).agree);

  CHECK_THROWS_AS((void)gauss_symmetric_reduction(P3->parse("t1 + t2")), SplitError);
}

TEST_CASE("both reduction routes agree on random symmetric polynomials") {
  // random polynomials in the elementary basis, substituted back to t's,
  // guarantee symmetric inputs of nontrivial shape
  std::mt19937 rng(60620);
  std::uniform_int_distribution<int> c(-2, 2);
  std::uniform_int_distribution<int> expo(0, 2);
  auto Z = Ring::integers();
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::string> tvars, evars;
    for (int i = 1; i <= n; ++i) {
      tvars.push_back("t" + std::to_string(i));
      evars.push_back("g" + std::to_string(i));
    }
    auto Pt = Ring::poly_ring(Z, tvars);
    auto Pe = Ring::poly_ring(Z, evars);

    // images of g_k: the elementary symmetric polynomials in the t's
    std::vector<RingElem> eimgs;
    for (int k = 1; k <= n; ++k) {
      RingElem s = Pt->zero();
      std::vector<int> idx(k);
      std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
          RingElem m = Pt->one();
          for (int j : idx) m = Pt->mul(m, Pt->var_elem("t" + std::to_string(j)));
          s = Pt->add(s, m);
          return;
        }
        for (int v = start; v <= n; ++v) {
          idx[depth] = v;
          rec(v + 1, depth + 1);
        }
      };
      rec(1, 0);
      eimgs.push_back(s);
    }
    auto subst = RingHom::poly_images(Pe, Pt, eimgs, RingHom::inclusion(Z, Pt));

    for (int trial = 0; trial < 12; ++trial) {
      RingElem g = Pe->zero();
      for (int terms = 0; terms < 3; ++terms) {
        RingElem m = Pe->from_int(c(rng));
        for (int k = 1; k <= n; ++k)
          m = Pe->mul(m, Pe->pow(Pe->var_elem("g" + std::to_string(k)), expo(rng)));
        g = Pe->add(g, m);
      }
      CHECK(check_symmetric_reduction(subst(g)).agree);
    }
  }
}

TEST_CASE("exhaustive fixed sets over small finite bases") {
  auto F3 = Ring::prime_field(3);
  auto alg = SplitAlgebra::create(parse_monic(F3, "t^2 + 1"));
  auto fixed = exhaustive_invariants(alg);
  CHECK(fixed.size() == 3);
  for (const auto& x : fixed) CHECK(alg->constant_value(x).has_value());
  CHECK(check_invariants(alg).agree);

  auto A = Ring::parse_spec("Quot(Poly(Fp(2); u), u^2)");
  auto bigger = SplitAlgebra::create(parse_monic(A, "t^2 - u*t"));
  CHECK(exhaustive_invariants(bigger).size() == 8);
  CHECK(check_invariants(bigger).agree);

  auto F2 = Ring::prime_field(2);
  auto inert = SplitAlgebra::create(parse_monic(F2, "t^2 + t + 1"));
  CHECK(exhaustive_invariants(inert).size() == 2);
  CHECK(check_invariants(inert).agree);
}

TEST_CASE("enumeration caps and infinite bases are refused") {
  auto F3 = Ring::prime_field(3);
  auto alg = SplitAlgebra::create(parse_monic(F3, "t^2 + 1"));
  CHECK_THROWS_AS((void)exhaustive_invariants(alg, 4), SplitError);
  try {
    (void)exhaustive_invariants(alg, 4);
  } catch (const SplitError& e) {
    CHECK(e.code() == Err::SearchSpaceTooLarge);
  }

  auto Q = Ring::rationals();
  auto aq = SplitAlgebra::create(parse_monic(Q, "t^2 + 1"));
  try {
    (void)exhaustive_invariants(aq);
    CHECK(false);
  } catch (const SplitError& e) {
    CHECK(e.code() == Err::SearchSpaceTooLarge);
  }
}

TEST_CASE("oracle reports carry printable evidence") {
  auto Q = Ring::rationals();
  OracleReport rep = check_discriminant(parse_monic(Q, "t^2 + 1"));
  CHECK(rep.agree);
  CHECK(rep.oracle_value == "-4");
  CHECK(rep.main_value == "-4");
  CHECK(!rep.inputs.empty());
}
