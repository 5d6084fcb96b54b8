#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "splitalg/invariants.hpp"

using namespace splitalg;

namespace {

bool is_fixed(const SplitAlgebraHandle& alg, const SplitElement& x) {
  for (const auto& s : all_permutations(alg->degree()))
    if (!alg->eq(apply_permutation(s, x), x)) return false;
  return true;
}

}  // namespace

TEST_CASE("field base with regular two gives the trivial module") {
  auto F3 = Ring::prime_field(3);
  auto alg = SplitAlgebra::create(parse_monic(F3, "t^2 + 1"));
  auto m = invariant_module(alg);
  CHECK(m.method == "FieldKernel");
  CHECK(m.complete);
  REQUIRE(m.generators.size() == 1);
  CHECK(alg->eq(m.generators[0], alg->one()));
}

TEST_CASE("nilpotent coefficient in characteristic two breaks triviality") {
  auto R = Ring::parse_spec("Quot(Poly(Fp(2); u), u^2)");
  auto alg = SplitAlgebra::create(parse_monic(R, "t^2 - u*t"));

  auto m = invariant_module(alg);
  CHECK(m.method == "Exhaustive");
  REQUIRE(m.generators.size() == 2);
  CHECK(alg->to_string(m.generators[1]) == "u*tau2");
  for (const auto& g : m.generators) CHECK(is_fixed(alg, g));

  // the lifted kernel fallback finds the same module
  InvariantOptions small;
  small.exhaustive_bound = 1;
  auto ml = invariant_module(alg, small);
  CHECK(ml.method == "LiftedKernel");
  REQUIRE(ml.generators.size() == 2);
  CHECK(alg->to_string(ml.generators[1]) == "u*tau2");

  // neither sufficient condition holds and the strict module is expected
  auto rep = verify_invariants_theorem(alg);
  CHECK(R->is_zero(rep.discriminant_value));
  CHECK(rep.two_regular.verdict == Reg::ZeroDivisor);
  CHECK(rep.discriminant_regular.verdict == Reg::ZeroDivisor);
  CHECK(!rep.hypothesis_holds);
  CHECK(!rep.invariants_trivial);
  CHECK(rep.consistent);
}

TEST_CASE("integer base goes through the saturated kernel") {
  auto Z = Ring::integers();
  auto rep = verify_invariants_theorem(SplitAlgebra::create(parse_monic(Z, "t^2 - t")));
  CHECK(rep.two_regular.verdict == Reg::Regular);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.invariants_trivial);
  CHECK(rep.consistent);
  CHECK(rep.module.method == "IntegerKernel");
  CHECK(Z->eq(rep.discriminant_value, Z->one()));
}

TEST_CASE("composite modulus goes through the Howell kernel") {
  auto Z4 = Ring::integers_mod(4);
  auto alg = SplitAlgebra::create(parse_monic(Z4, "t^2"));
  auto m = invariant_module(alg);
  CHECK(m.method == "HowellKernel");
  REQUIRE(m.generators.size() == 2);
  CHECK(alg->to_string(m.generators[1]) == "2*tau2");
  for (const auto& g : m.generators) CHECK(is_fixed(alg, g));
}

TEST_CASE("product bases split the kernel componentwise through lifting") {
  auto P22 = Ring::parse_spec("Prod(Zmod(2), Zmod(2))");
  auto alg = SplitAlgebra::create(parse_monic(P22, "t^2"));
  auto m = invariant_module(alg);
  CHECK(m.generators.size() > 1);
  for (const auto& g : m.generators) CHECK(is_fixed(alg, g));

  InvariantOptions small;
  small.exhaustive_bound = 1;
  auto ml = invariant_module(alg, small);
  CHECK(ml.method == "LiftedKernel");
  CHECK(ml.generators.size() == m.generators.size());
}

TEST_CASE("polynomial bases report their truncation honestly") {
  auto Z = Ring::integers();
  auto B = Ring::poly_ring(Z, {"f1", "f2", "f3"});
  auto gf = monic_from_signed(
      B, {B->var_elem("f1"), B->var_elem("f2"), B->var_elem("f3")});
  auto m = invariant_module(SplitAlgebra::create(gf));
  CHECK(m.method == "IntegerKernel");
  CHECK(!m.complete);
  CHECK(m.truncation_degree == 4);
  REQUIRE(m.generators.size() == 1);
  CHECK(m.algebra->eq(m.generators[0], m.algebra->one()));
}

TEST_CASE("fraction field base in odd characteristic stays trivial") {
  auto Ks = Ring::parse_spec("Frac(Poly(Fp(3); s))");
  auto rep = verify_invariants_theorem(SplitAlgebra::create(parse_monic(Ks, "t^3 - s")));
  CHECK(rep.two_regular.verdict == Reg::Regular);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.invariants_trivial);
  CHECK(rep.consistent);
  CHECK(rep.module.method == "FieldKernel");
}

TEST_CASE("random field cases confirm the regularity criterion") {
  std::mt19937 rng(555);
  for (int p : {3, 5, 7}) {
    auto K = Ring::prime_field(p);
    std::uniform_int_distribution<int> c(0, p - 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<RingElem> coeffs;
      for (int k = 0; k < 3; ++k) coeffs.push_back(K->from_int(c(rng)));
      coeffs.push_back(K->one());
      auto alg = SplitAlgebra::create(make_monic(K, coeffs));
      auto m = invariant_module(alg);
      REQUIRE(m.generators.size() == 1);
      CHECK(alg->eq(m.generators[0], alg->one()));
    }
  }
}

TEST_CASE("exceptional search isolates the dual-number family") {
  ExceptionalSearchSpec spec;
  spec.ring_specs = {"Quot(Poly(Fp(2); u), u^2)"};
  spec.degrees = {2};
  auto findings = search_exceptional(spec);
  REQUIRE(findings.size() == 8);
  for (const auto& fd : findings) {
    REQUIRE(fd.extra_invariants.size() == 1);
    // the linear coefficient decides which multiple of tau2 is fixed
    bool has_ut = fd.poly.find("u*t") != std::string::npos;
    CHECK(fd.extra_invariants[0] == (has_ut ? "u*tau2" : "tau2"));
  }

  ExceptionalSearchSpec spec5;
  spec5.ring_specs = {"Zmod(5)"};
  spec5.degrees = {2};
  CHECK(search_exceptional(spec5).empty());
}

TEST_CASE("symmetric polynomials rewrite in the elementary basis") {
  auto Z = Ring::integers();
  auto P2 = Ring::poly_ring(Z, {"t1", "t2"});
  auto red = reduce_symmetric_polynomial(P2->parse("t1^2 + t2^2"));
  CHECK(red.e_ring->eq(red.expression, red.e_ring->parse("f1^2 - 2*f2")));

  auto P3 = Ring::poly_ring(Z, {"t1", "t2", "t3"});
  auto red3 = reduce_symmetric_polynomial(P3->parse("t1^3 + t2^3 + t3^3"));
  CHECK(red3.e_ring->eq(red3.expression,
                        red3.e_ring->parse("f1^3 - 3*f1*f2 + 3*f3")));

  auto rede = reduce_symmetric_polynomial(P3->parse("t1*t2 + t1*t3 + t2*t3"));
  CHECK(rede.e_ring->eq(rede.expression, rede.e_ring->parse("f2")));

  // constants pass through untouched
  auto redc = reduce_symmetric_polynomial(P3->from_int(7));
  CHECK(redc.e_ring->eq(redc.expression, redc.e_ring->from_int(7)));

  CHECK_THROWS_WITH_AS((void)reduce_symmetric_polynomial(P2->parse("t1^2 + t2")),
                       doctest::Contains("not invariant under swapping"), SplitError);
}

TEST_CASE("reduction round trips through substitution") {
  auto Z = Ring::integers();
  auto P3 = Ring::poly_ring(Z, {"t1", "t2", "t3"});
  auto h = P3->parse("(t1 + t2 + t3)^2 + t1*t2*t3 - 4");
  auto red = reduce_symmetric_polynomial(h);

  // substituting the elementary symmetric polynomials back recovers h
  auto e1 = P3->parse("t1 + t2 + t3");
  auto e2 = P3->parse("t1*t2 + t1*t3 + t2*t3");
  auto e3 = P3->parse("t1*t2*t3");
  auto back = RingHom::poly_images(red.e_ring, P3, {e1, e2, e3},
                                   RingHom::inclusion(Z, P3));
  CHECK(P3->eq(back(red.expression), h));
}
