#include <doctest.h>

#include "ordfree/enumerate.hpp"
#include "ordfree/io.hpp"
#include "ordfree/polymat.hpp"

using namespace ordfree;

namespace {

Group zz() {
  return Group::free_product({Group::integers(), Group::integers()});
}

Element key(int p, int q) {
  return Element::tuple({Element::integer(p), Element::integer(q)});
}

Element word(std::vector<std::pair<std::size_t, int>> syllables) {
  std::vector<Syllable> out;
  for (auto [f, e] : syllables) out.push_back({f, Element::integer(e)});
  return Element::word(std::move(out));
}

Ordering lex_std() {
  return Ordering::lex({Ordering::int_std(), Ordering::int_std()});
}

}  // namespace

TEST_CASE("generator matrices have the triangular shape") {
  Group g = zz();
  PolyMatrix2 m = rho(g, word({{0, 1}}));
  Group d = m.carrier();
  // [[a, (a-1)t], [0, 1]]
  CHECK(m.e11() == Poly::constant(RingElement::monomial(d, key(1, 0), 1)));
  CHECK(m.e21().is_zero());
  CHECK(m.e22() == Poly::constant(RingElement::one(d)));
  CHECK(m.e12().degree() == 1);
  CHECK(m.e12().coeff(1).coefficient(key(1, 0)) == 1);
  CHECK(m.e12().coeff(1).coefficient(key(0, 0)) == -1);
  CHECK(m.e12().coeff(0).is_zero());
}

TEST_CASE("rho of the empty word is the identity matrix") {
  Group g = zz();
  CHECK(rho(g, identity(g)) == PolyMatrix2::identity(rho_carrier(g)));
}

TEST_CASE("product of the two generator matrices") {
  Group g = zz();
  PolyMatrix2 m = mat_mul(rho(g, word({{0, 1}})), rho(g, word({{1, 1}})));
  CHECK(m == rho(g, word({{0, 1}, {1, 1}})));
  // [[a + (a-1)(b-1)t^2, (ab-b)t], [(b-1)t, b]]
  CHECK(m.e11().coeff(0).coefficient(key(1, 0)) == 1);
  CHECK(m.e11().coeff(2).coefficient(key(1, 1)) == 1);
  CHECK(m.e11().coeff(2).coefficient(key(1, 0)) == -1);
  CHECK(m.e11().coeff(2).coefficient(key(0, 1)) == -1);
  CHECK(m.e11().coeff(2).coefficient(key(0, 0)) == 1);
  CHECK(m.e12().coeff(1).coefficient(key(1, 1)) == 1);
  CHECK(m.e12().coeff(1).coefficient(key(0, 1)) == -1);
  CHECK(m.e21().coeff(1).coefficient(key(0, 1)) == 1);
  CHECK(m.e21().coeff(1).coefficient(key(0, 0)) == -1);
  CHECK(m.e22() == Poly::constant(RingElement::monomial(m.carrier(),
                                                        key(0, 1), 1)));
}

TEST_CASE("matrix subtraction of equal matrices is zero") {
  Group g = zz();
  PolyMatrix2 m = rho(g, word({{0, 2}, {1, -1}}));
  CHECK(mat_sub(m, m) == PolyMatrix2::zero(m.carrier()));
}

TEST_CASE("commutator expands to first order as expected") {
  Group g = zz();
  PolyMatrix2 m = rho(g, word({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
  Group d = m.carrier();
  // Constant term is the identity.
  CHECK(m.e11().coeff(0) == RingElement::one(d));
  CHECK(m.e22().coeff(0) == RingElement::one(d));
  CHECK(m.e12().coeff(0).is_zero());
  CHECK(m.e21().coeff(0).is_zero());
  // Degree-1 diagonal vanishes.
  CHECK(m.e11().coeff(1).is_zero());
  CHECK(m.e22().coeff(1).is_zero());
  // e12 t-coefficient: a - 1 + b^-1 - a b^-1
  const RingElement& e12 = m.e12().coeff(1);
  CHECK(e12.coefficient(key(1, 0)) == 1);
  CHECK(e12.coefficient(key(0, 0)) == -1);
  CHECK(e12.coefficient(key(0, -1)) == 1);
  CHECK(e12.coefficient(key(1, -1)) == -1);
  // e21 t-coefficient: a^-1 b - a^-1 + 1 - b
  const RingElement& e21 = m.e21().coeff(1);
  CHECK(e21.coefficient(key(-1, 1)) == 1);
  CHECK(e21.coefficient(key(-1, 0)) == -1);
  CHECK(e21.coefficient(key(0, 0)) == 1);
  CHECK(e21.coefficient(key(0, 1)) == -1);
}

TEST_CASE("matrix signs under the lexicographic product order") {
  Group g = zz();
  Group d = rho_carrier(g);
  PolyMatrix2 id = PolyMatrix2::identity(d);
  CHECK(mat_sign(lex_std(), mat_sub(rho(g, word({{0, 1}})), id)) ==
        Sign::Positive);
  CHECK(mat_sign(lex_std(), mat_sub(rho(g, word({{1, 1}})),
                                    rho(g, word({{0, 1}})))) ==
        Sign::Negative);
  CHECK(mat_sign(lex_std(), PolyMatrix2::zero(d)) == Sign::Zero);
}

TEST_CASE("matrix sign is odd and additive on positives") {
  Group g = zz();
  std::vector<Element> universe = element_universe(g, 3, 2);
  Sampler sampler(17);
  Ordering o = lex_std();
  PolyMatrix2 id = PolyMatrix2::identity(rho_carrier(g));
  int additive_checks = 0;
  for (int t = 0; t < 10000 && additive_checks < 50; ++t) {
    PolyMatrix2 m = mat_sub(rho(g, sampler.pick(universe)),
                            rho(g, sampler.pick(universe)));
    PolyMatrix2 n = mat_sub(rho(g, sampler.pick(universe)), id);
    Sign sm = mat_sign(o, m);
    CHECK(mat_sign(o, mat_neg(m)) ==
          (sm == Sign::Positive   ? Sign::Negative
           : sm == Sign::Negative ? Sign::Positive
                                  : Sign::Zero));
    if (sm == Sign::Positive && mat_sign(o, n) == Sign::Positive) {
      CHECK(mat_sign(o, mat_add(m, n)) == Sign::Positive);
      ++additive_checks;
    }
  }
  CHECK(additive_checks == 50);
}

TEST_CASE("rho is a homomorphism on samples") {
  Group g = zz();
  std::vector<Element> universe = element_universe(g, 3, 2);
  Sampler sampler(19);
  PolyMatrix2 id = PolyMatrix2::identity(rho_carrier(g));
  for (int t = 0; t < 60; ++t) {
    const Element& u = sampler.pick(universe);
    const Element& v = sampler.pick(universe);
    CHECK(rho(g, multiply(g, u, v)) == mat_mul(rho(g, u), rho(g, v)));
    CHECK(mat_mul(rho(g, u), rho(g, inverse(g, u))) == id);
  }
}

TEST_CASE("constant term is the diagonal of alpha") {
  Group g = zz();
  Group d = rho_carrier(g);
  std::vector<Element> universe = element_universe(g, 3, 2);
  for (const auto& w : universe) {
    PolyMatrix2 m = rho(g, w);
    Element image = alpha(g, w);
    Element f = Element::tuple({image.components()[0],
                                identity(Group::integers())});
    Element h = Element::tuple({identity(Group::integers()),
                                image.components()[1]});
    CHECK(m.e11().coeff(0) == RingElement::monomial(d, f, 1));
    CHECK(m.e22().coeff(0) == RingElement::monomial(d, h, 1));
    CHECK(m.e12().coeff(0).is_zero());
    CHECK(m.e21().coeff(0).is_zero());
  }
}

TEST_CASE("ping-pong classes") {
  Group g = zz();
  Group d = rho_carrier(g);
  Poly one = Poly::constant(RingElement::one(d));
  CHECK(pingpong_class(one, one) == PingPongClass::V3);

  // rho(x2) applied to (1, 1) lands in V2 with bottom entry b + (b-1)t.
  PolyVector2 v = apply(rho(g, word({{1, 1}})), {one, one});
  CHECK(pingpong_class(v.top, v.bottom) == PingPongClass::V2);
  CHECK(v.top == one);
  CHECK(v.bottom.coeff(0) == RingElement::monomial(d, key(0, 1), 1));
  CHECK(v.bottom.coeff(1).coefficient(key(0, 1)) == 1);
  CHECK(v.bottom.coeff(1).coefficient(key(0, 0)) == -1);

  // rho(x1) then raises the top degree into V1.
  v = apply(rho(g, word({{0, 1}})), v);
  CHECK(pingpong_class(v.top, v.bottom) == PingPongClass::V1);

  Poly zero{d};
  CHECK_THROWS_AS(pingpong_class(zero, zero), ZeroElementError);
}

TEST_CASE("bounded injectivity checks") {
  Group g = zz();
  InjectivityReport small = injectivity_check(g, 2, 1);
  CHECK(small.ok);
  CHECK(small.words_checked == 12);

  InjectivityReport larger = injectivity_check(g, 4, 2);
  CHECK(larger.ok);
  CHECK(!larger.counterexample.has_value());
}

TEST_CASE("rho rejects groups that are not two-factor free products") {
  CHECK_THROWS_AS(rho_carrier(Group::integers()), ShapeMismatchError);
  Group three = Group::free_product(
      {Group::integers(), Group::integers(), Group::integers()});
  CHECK_THROWS_AS(rho(three, identity(three)), ShapeMismatchError);
}
