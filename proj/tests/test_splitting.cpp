#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "splitalg/splitting.hpp"

using namespace splitalg;

TEST_CASE("quadratic algebra arithmetic and universal relations") {
  auto Q = Ring::rationals();
  auto A = SplitAlgebra::create(parse_monic(Q, "t^2 - 3*t + 2"));
  CHECK(A->basis_size() == 2);

  auto t1 = A->root(1), t2 = A->root(2);
  CHECK(A->to_string(A->mul(t2, t2)) == "3*tau2 - 2");
  CHECK(A->eq(A->add(t1, t2), A->from_int(3)));
  CHECK(A->eq(A->mul(t1, t2), A->from_int(2)));
  CHECK(Q->eq(discriminant(A), Q->from_int(1)));

  auto x = A->parse("(tau1 - tau2)^2 + 5");
  CHECK(A->eq(x, A->from_int(6)));
  auto y = A->parse("1/2*tau2 + 3");
  CHECK(A->to_string(A->parse(A->to_string(y))) == A->to_string(y));

  auto coords = A->coordinates(y);
  REQUIRE(coords.size() == 2);
  CHECK(A->eq(A->from_coordinates(coords), y));
}

TEST_CASE("generic cubic satisfies the Vieta relations") {
  auto Zpq = Ring::poly_ring(Ring::integers(), {"p", "q"});
  auto f = parse_monic(Zpq, "t^3 + p*t + q");
  auto A = SplitAlgebra::create(f);
  CHECK(A->basis_size() == 6);

  auto r1 = A->root(1), r2 = A->root(2), r3 = A->root(3);
  CHECK(A->is_zero(A->add(A->add(r1, r2), r3)));
  auto s2 = A->add(A->add(A->mul(r1, r2), A->mul(r1, r3)), A->mul(r2, r3));
  CHECK(A->eq(s2, A->from_base(Zpq->parse("p"))));
  auto s3 = A->mul(A->mul(r1, r2), r3);
  CHECK(A->eq(s3, A->from_base(Zpq->parse("-q"))));

  std::vector<RingElem> fd(f.coeffs.begin(), f.coeffs.end());
  for (int i = 1; i <= 3; ++i) CHECK(A->is_zero(A->eval_dense(fd, A->root(i))));

  CHECK(Zpq->eq(discriminant(A), Zpq->parse("-4*p^3 - 27*q^2")));
}

TEST_CASE("permutation utilities and the pinned composition order") {
  auto p = parse_perm(3, "[2,3,1]");
  CHECK(perm_string(p) == "[2,3,1]");
  CHECK(cycle_string(p) == "(1 2 3)");
  CHECK(cycle_string(Perm::identity(3)) == "()");
  CHECK(cycle_string(Perm::transposition(3, 1, 3)) == "(1 3)");
  CHECK(compose(p, p.inverse()) == Perm::identity(3));

  // compose(s, r) applies s first: (s then r)(i) = r(s(i))
  auto s = parse_perm(3, "[2,3,1]");
  auto r = parse_perm(3, "[2,1,3]");
  auto sr = compose(s, r);
  CHECK(sr(1) == 1);
  CHECK(sr(2) == 3);
  CHECK(sr(3) == 2);

  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS_AS((void)parse_perm(3, "[1,1,2]"), SplitError);
}

TEST_CASE("symmetric action permutes roots and is a ring homomorphism") {
  auto Zpq = Ring::poly_ring(Ring::integers(), {"p", "q"});
  auto A = SplitAlgebra::create(parse_monic(Zpq, "t^3 + p*t + q"));
  auto perms = all_permutations(3);
  REQUIRE(perms.size() == 6);

  auto probe = A->parse("tau2^2*tau3 + 2*tau1 - q*tau3");
  for (const auto& s : perms) {
    for (int i = 1; i <= 3; ++i)
      CHECK(A->eq(apply_permutation(s, A->root(i)), A->root(s.inverse()(i))));
    for (const auto& r : perms) {
      auto lhs = apply_permutation(compose(s, r), probe);
      auto rhs = apply_permutation(s, apply_permutation(r, probe));
      CHECK(A->eq(lhs, rhs));
    }
    auto prod = A->mul(probe, A->add(probe, A->one()));
    CHECK(A->eq(apply_permutation(s, prod),
                A->mul(apply_permutation(s, probe),
                       A->add(apply_permutation(s, probe), A->one()))));
  }

  // elementary symmetric expressions are fixed points
  auto e2 = A->parse("tau1*tau2 + tau1*tau3 + tau2*tau3");
  auto e3 = A->parse("tau1*tau2*tau3");
  for (const auto& s : perms) {
    CHECK(A->eq(apply_permutation(s, e2), e2));
    CHECK(A->eq(apply_permutation(s, e3), e3));
  }
}

TEST_CASE("tower polynomials refine the defining polynomial") {
  auto Zpq = Ring::poly_ring(Ring::integers(), {"p", "q"});
  auto f = parse_monic(Zpq, "t^3 + p*t + q");
  auto A = SplitAlgebra::create(f);

  auto tw3 = A->tower_poly(3);
  for (size_t k = 0; k < tw3.size(); ++k)
    CHECK(A->eq(tw3[k], A->from_base(f.coeffs[k])));

  auto tw2 = A->tower_poly(2);
  REQUIRE(tw2.size() == 3);
  CHECK(A->eq(tw2[2], A->one()));

  // multiplying back by (t - tau3) recovers f coefficientwise
  auto r3 = A->root(3);
  std::vector<SplitElement> conv(4, A->zero());
  for (int k = 0; k <= 2; ++k) {
    conv[k + 1] = A->add(conv[k + 1], tw2[k]);
    conv[k] = A->sub(conv[k], A->mul(r3, tw2[k]));
  }
  for (int k = 0; k <= 3; ++k) CHECK(A->eq(conv[k], A->from_base(f.coeffs[k])));
}

TEST_CASE("conjugate products collapse to base polynomials") {
  auto Q = Ring::rationals();
  auto A2 = SplitAlgebra::create(parse_monic(Q, "t^2 + 1"));
  // the orbit of one root is all roots, so the product is f itself
  auto cp = conjugate_product(A2->root(2));
  CHECK(monic_to_string(cp) == "t^2 + 1");
  CHECK(cp.ring->same(*Q));

  auto A3 = SplitAlgebra::create(parse_monic(Q, "t^3 - 2"));
  auto x = A3->add(A3->root(2), A3->root(3));
  auto cp3 = conjugate_product(x);
  CHECK(cp3.degree() == 6);
  CHECK(monic_to_string(cp3) == "t^6 + 4*t^3 + 4");

  // a root of the cubic has each conjugate twice: the square of f
  auto cpr = conjugate_product(A3->root(1));
  CHECK(monic_eq(cpr, monic_mul(parse_monic(Q, "t^3 - 2"), parse_monic(Q, "t^3 - 2"))));
}

TEST_CASE("structured homomorphisms validate their defining data") {
  auto Z = Ring::integers();
  auto Zpq = Ring::poly_ring(Z, {"p", "q"});
  auto F7 = Ring::prime_field(7);

  auto inc = RingHom::inclusion(Z, Zpq);
  CHECK(Zpq->eq(inc(Z->from_int(5)), Zpq->from_int(5)));
  CHECK(Zpq->eq(RingHom::identity(Zpq)(Zpq->parse("p*q")), Zpq->parse("p*q")));
  CHECK(RingHom::initial(F7)(Z->from_int(10)) == F7->from_int(3));

  auto h = RingHom::poly_images(Zpq, F7, {F7->from_int(1), F7->from_int(3)},
                                RingHom::initial(F7));
  CHECK(h(Zpq->parse("p^2 + q")) == F7->from_int(4));
  CHECK_THROWS_AS((void)RingHom::poly_images(Zpq, F7, {F7->from_int(1)},
                                             RingHom::initial(F7)),
                  SplitError);

  // conjugation on Q[x]/(x^2 - 2): x -> -x is a hom, x -> 1 is not
  auto K = Ring::parse_spec("Quot(Poly(Q; x), x^2 - 2)");
  auto Qr = Ring::rationals();
  auto conj = RingHom::generator_image(K, K, K->neg(K->parse("x")),
                                       RingHom::inclusion(Qr, K));
  auto a = K->parse("3 + 2*x");
  CHECK(K->eq(conj(a), K->parse("3 - 2*x")));
  CHECK(K->eq(conj(conj(a)), a));
  CHECK_THROWS_AS((void)RingHom::generator_image(K, K, K->one(),
                                                 RingHom::inclusion(Qr, K)),
                  SplitError);

  auto through = RingHom::composed(inc, h);
  CHECK(through(Z->from_int(9)) == F7->from_int(2));
  CHECK_THROWS_AS((void)RingHom::composed(h, h), SplitError);
}

TEST_CASE("base change transports elements and discriminants") {
  auto Zpq = Ring::poly_ring(Ring::integers(), {"p", "q"});
  auto A = SplitAlgebra::create(parse_monic(Zpq, "t^3 + p*t + q"));
  auto F7 = Ring::prime_field(7);
  auto h = RingHom::poly_images(Zpq, F7, {F7->from_int(1), F7->from_int(3)},
                                RingHom::initial(F7));
  auto B = extend_scalars(A, h);
  CHECK(B->basis_size() == 6);
  CHECK(monic_to_string(B->poly()) == "t^3 + t + 3");

  // the discriminant is a polynomial identity, so it commutes with base change
  CHECK(F7->eq(discriminant(B), h(discriminant(A))));
  CHECK(F7->eq(discriminant(B), F7->from_int(5)));

  auto probe = A->parse("tau2^2*tau3 + 2*tau1 - q*tau3");
  auto img = map_scalars(A, B, h, probe);
  // mapping commutes with multiplication
  auto sq = map_scalars(A, B, h, A->mul(probe, probe));
  CHECK(B->eq(sq, B->mul(img, img)));

  auto A2 = SplitAlgebra::create(parse_monic(F7, "t^2 + 1"));
  CHECK_THROWS_AS((void)map_scalars(A, A2, h, probe), SplitError);
}

TEST_CASE("degree one and degree four edges") {
  auto Q = Ring::rationals();
  auto A1 = SplitAlgebra::create(parse_monic(Q, "t + 4"));
  CHECK(A1->basis_size() == 1);
  CHECK(A1->eq(A1->root(1), A1->from_int(-4)));
  CHECK(Q->eq(discriminant(A1), Q->one()));
  CHECK(A1->eq(A1->parse("tau1^2 - 1"), A1->from_int(15)));

  auto Z = Ring::integers();
  auto f4 = parse_monic(Z, "t^4 - 2*t + 1");
  auto A4 = SplitAlgebra::create(f4);
  CHECK(A4->basis_size() == 24);
  CHECK(A4->basis_exponents()[0] == std::vector<int>({0, 0, 0}));
  std::vector<RingElem> fd(f4.coeffs.begin(), f4.coeffs.end());
  for (int i = 1; i <= 4; ++i) CHECK(A4->is_zero(A4->eval_dense(fd, A4->root(i))));

  auto pr = A4->parse("tau4^3*tau3^2*tau2 + tau1");
  auto s = all_permutations(4)[5];
  CHECK(A4->eq(apply_permutation(s.inverse(), apply_permutation(s, pr)), pr));

  CHECK_THROWS_AS((void)A4->root(5), SplitError);
  CHECK_THROWS_AS((void)A4->parse("tau5"), SplitError);
}

TEST_CASE("discriminant routes agree on random small polynomials") {
  std::mt19937 rng(90125);
  std::uniform_int_distribution<int> c(-4, 4);
  auto Z = Ring::integers();
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<RingElem> coeffs;
      for (int k = 0; k < n; ++k) coeffs.push_back(Z->from_int(c(rng)));
      coeffs.push_back(Z->one());
      MonicPoly f = make_monic(Z, coeffs);
      auto alg = SplitAlgebra::create(f);
      CHECK(Z->eq(discriminant(alg), discriminant(f)));
    }
  }
}

TEST_CASE("root adjunction splits off one tower level") {
  // dividing out the adjoined root leaves a splitting algebra over the
  // extension whose rank accounts for the missing factor of n
  auto F5 = Ring::prime_field(5);
  auto f = parse_monic(F5, "t^3 - t - 1");
  auto B = Ring::parse_spec("Quot(Poly(Fp(5); u), u^3 - u - 1)");
  auto u = B->parse("u");

  std::vector<RingElem> lifted;
  for (const auto& ck : f.coeffs) lifted.push_back(B->from_int(ck.as_int()));
  MonicPoly fB = make_monic(B, lifted);
  auto sd = synthetic_divide(fB, u);
  CHECK(sd.remainder.is_zero());
  CHECK(sd.quotient.degree() == 2);

  auto Ag = SplitAlgebra::create(sd.quotient);
  CHECK(Ag->basis_size() == 2);
  // rank over F5 multiplies through the tower: 3 * 2 = 3!
  CHECK(3 * Ag->basis_size() == 6);

  // f = (t - u) g forces f'(u) = g(u)
  auto df = derivative_coeffs(fB);
  RingElem dfu = B->zero();
  for (size_t k = df.size(); k-- > 0;) dfu = B->add(B->mul(dfu, u), df[k]);
  CHECK(B->eq(dfu, eval_monic(sd.quotient, u)));

  // roots of g still satisfy f
  std::vector<RingElem> fd(fB.coeffs.begin(), fB.coeffs.end());
  for (int i = 1; i <= 2; ++i) CHECK(Ag->is_zero(Ag->eval_dense(fd, Ag->root(i))));
}

TEST_CASE("oversized bases are refused upfront") {
  auto Q = Ring::rationals();
  std::vector<RingElem> coeffs(10, Q->zero());
  coeffs.push_back(Q->one());
  MonicPoly f = make_monic(Q, coeffs);  // t^10
  CHECK_THROWS_AS((void)SplitAlgebra::create(f), SplitError);
}
