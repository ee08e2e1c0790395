#include <doctest.h>

#include "ordfree/coproduct.hpp"
#include "ordfree/enumerate.hpp"
#include "ordfree/io.hpp"

using namespace ordfree;

namespace {

Group zz() {
  return Group::free_product({Group::integers(), Group::integers()});
}

Element word(const Group& g, const char* text) {
  return parse_element(text, g);
}

Ordering std2() {
  return Ordering::bergman({Ordering::int_std(), Ordering::int_std()});
}

}  // namespace

TEST_CASE("the free-product order extends and refines the factors") {
  Group g = zz();
  Ordering o0 = Ordering::int_std();
  Ordering o1 = Ordering::int_std();
  CHECK(compare_bergman(o0, o1, g, identity(g), word(g, "x1")) ==
        Verdict::Less);
  CHECK(compare_bergman(o0, o1, g, word(g, "x1"), word(g, "x2")) ==
        Verdict::Greater);
  CHECK(compare_bergman(o0, o1, g, identity(g),
                        word(g, "x1*x2*x1^-1*x2^-1")) == Verdict::Less);
  // The asymmetry witness: f g < f' g' whenever f < f' even though g' < g.
  CHECK(compare_bergman(o0, o1, g, word(g, "x2"), word(g, "x1*x2^-1")) ==
        Verdict::Less);
  CHECK(compare_bergman(o0, o1, g, word(g, "x1"), word(g, "x1")) ==
        Verdict::Equal);
}

TEST_CASE("pullback through the lexicographic order is the same order") {
  Group g = zz();
  Ordering lex = Ordering::lex({Ordering::int_std(), Ordering::int_std()});
  std::vector<Element> universe = element_universe(g, 3, 1);
  for (const auto& u : universe)
    for (const auto& v : universe)
      CHECK(compare_with_product_order(lex, g, u, v) ==
            compare_bergman(Ordering::int_std(), Ordering::int_std(), g, u,
                            v));
}

TEST_CASE("pullback through other product orders changes the result") {
  Group g = zz();
  // Swapping row priority alone cannot move x1 against x2: that comparison
  // is decided inside the first coordinate, where a > 1 either way.
  Ordering swapped = Ordering::vec_lex(
      {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}});
  CHECK(compare_with_product_order(swapped, g, word(g, "x1"),
                                   word(g, "x2")) == Verdict::Greater);
  // A negated first-coordinate row reverses a against 1 and flips the pair.
  Ordering reversed = Ordering::vec_lex(
      {{BigInt(-1), BigInt(0)}, {BigInt(0), BigInt(1)}});
  CHECK(compare_with_product_order(reversed, g, word(g, "x1"),
                                   word(g, "x2")) == Verdict::Less);
  CHECK(compare_with_product_order(reversed, g, word(g, "x1"),
                                   word(g, "x1")) == Verdict::Equal);
  // It agrees with the bergman order built from reversed integers.
  std::vector<Element> universe = element_universe(g, 2, 1);
  for (const auto& u : universe)
    for (const auto& v : universe)
      CHECK(compare_with_product_order(reversed, g, u, v) ==
            compare_bergman(Ordering::int_rev(), Ordering::int_std(), g, u,
                            v));
}

TEST_CASE("iterated construction on three factors") {
  Group z = Group::integers();
  Group three = Group::free_product({z, z, z});
  Ordering o = nary_bergman(
      {Ordering::int_std(), Ordering::int_std(), Ordering::int_std()}, three);
  CompiledOrder order(o, three);
  CHECK(order.compare(word(three, "x1"), word(three, "x3")) ==
        Verdict::Greater);
  CHECK(order.compare(identity(three), word(three, "x3")) == Verdict::Less);

  // Two factors reduce to the plain construction.
  Group two = zz();
  Ordering o2 = nary_bergman({Ordering::int_std(), Ordering::int_std()}, two);
  CHECK(o2 == std2());
  CHECK_THROWS_AS(nary_bergman({Ordering::int_std()}, three),
                  ShapeMismatchError);
}

TEST_CASE("restriction of the iterated order to a prefix subgroup") {
  Group z = Group::integers();
  Group three = Group::free_product({z, z, z});
  Group two = zz();
  CompiledOrder order3(Ordering::standard(three), three);
  CompiledOrder order2(Ordering::standard(two), two);
  std::vector<Element> universe = element_universe(two, 3, 2);
  for (const auto& u : universe) {
    for (const auto& v : universe) {
      // Words over the first two factors keep their syllables verbatim.
      Element u3 = Element::word(u.syllables());
      Element v3 = Element::word(v.syllables());
      CHECK(order3.compare(u3, v3) == order2.compare(u, v));
    }
  }
}

TEST_CASE("bracketings can disagree across a grouping boundary") {
  // The two bracketings of three factors order the word
  // x1^-1 x2^-1 x1 x2 x3^-1 oppositely: its image in the direct product of
  // the outer factors keeps the commutator for ((0,1),2) but collapses it
  // for (0,(1,2)), where the x3^-1 part then decides negatively.
  Group z = Group::integers();
  Group flat = Group::free_product({z, z, z});
  Element w = word(flat, "x1^-1*x2^-1*x1*x2*x3^-1");

  Bracketing left = Bracketing::node(
      Bracketing::node(Bracketing::leaf(0), Bracketing::leaf(1)),
      Bracketing::leaf(2));
  Bracketing right = Bracketing::node(
      Bracketing::leaf(0),
      Bracketing::node(Bracketing::leaf(1), Bracketing::leaf(2)));

  Group left_group = bracketed_group(flat, left);
  Group right_group = bracketed_group(flat, right);
  CompiledOrder left_order(Ordering::standard(left_group), left_group);
  CompiledOrder right_order(Ordering::standard(right_group), right_group);

  CHECK(left_order.compare(identity(left_group),
                           to_bracketed(flat, left, w)) == Verdict::Less);
  CHECK(right_order.compare(identity(right_group),
                            to_bracketed(flat, right, w)) ==
        Verdict::Greater);

  // The flat n-ary ordering follows the left-associated bracketing.
  CompiledOrder flat_order(Ordering::standard(flat), flat);
  CHECK(flat_order.compare(identity(flat), w) == Verdict::Less);
}

TEST_CASE("regrouping is an isomorphism onto the bracketed shape") {
  Group z = Group::integers();
  Group flat = Group::free_product({z, z, z, z});
  std::vector<Element> universe = element_universe(flat, 2, 1);
  Sampler sampler(29);
  for (const auto& b : Bracketing::all(4)) {
    Group nested = bracketed_group(flat, b);
    for (int t = 0; t < 60; ++t) {
      const Element& u = sampler.pick(universe);
      const Element& v = sampler.pick(universe);
      CHECK(to_bracketed(flat, b, multiply(flat, u, v)) ==
            multiply(nested, to_bracketed(flat, b, u),
                     to_bracketed(flat, b, v)));
    }
  }
  CHECK(Bracketing::all(3).size() == 2);
  CHECK(Bracketing::all(4).size() == 5);
}

TEST_CASE("factor maps substitute and renormalize") {
  Group z = Group::integers();
  Group g = zz();
  Hom square = Hom::from_integers(z, Element::integer(2));
  Hom phi = Hom::free_product({square, Hom::identity(z)});
  CHECK(apply_hom(phi, word(g, "x1*x2^-1")) == word(g, "x1^2*x2^-1"));
  CHECK(apply_hom(phi, word(g, "x1^-1*x2*x1")) == word(g, "x1^-2*x2*x1^2"));
  CHECK(apply_hom(Hom::identity(g), word(g, "x1*x2*x1^-1")) ==
        word(g, "x1*x2*x1^-1"));
  // Images multiply: phi is a homomorphism on samples.
  std::vector<Element> universe = element_universe(g, 3, 2);
  Sampler sampler(31);
  for (int t = 0; t < 200; ++t) {
    const Element& u = sampler.pick(universe);
    const Element& v = sampler.pick(universe);
    CHECK(apply_hom(phi, multiply(g, u, v)) ==
          multiply(g, apply_hom(phi, u), apply_hom(phi, v)));
  }
}

TEST_CASE("Klein bottle maps must respect the relation") {
  Group k = Group::klein_bottle();
  // y -> y^-1, x -> x is an automorphism.
  CHECK_NOTHROW(Hom::from_klein(k, Element::klein(-1, 0),
                                Element::klein(0, 1)));
  // y -> x, x -> y violates x y x^-1 y = 1.
  CHECK_THROWS_AS(Hom::from_klein(k, Element::klein(0, 1),
                                  Element::klein(1, 0)),
                  ShapeMismatchError);
  // Into the integers only the y -> 0 maps survive.
  Group z = Group::integers();
  CHECK_NOTHROW(Hom::from_klein(z, Element::integer(0), Element::integer(5)));
  CHECK_THROWS_AS(Hom::from_klein(z, Element::integer(1),
                                  Element::integer(0)),
                  ShapeMismatchError);
}

TEST_CASE("order-preserving maps into a vector-ordered target") {
  // k -> (k, 0) from (Z, std) into (Z^2, veclex) preserves order, so the
  // induced map of free products preserves the constructed orders.
  Group z = Group::integers();
  Group z2 = Group::direct_product({z, z});
  Group source = zz();
  Group target = Group::free_product({z2, z2});
  Ordering rows = Ordering::vec_lex(
      {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
  CompiledOrder source_order(Ordering::standard(source), source);
  CompiledOrder target_order(Ordering::bergman({rows, rows}), target);
  Hom include = Hom::from_integers(
      z2, Element::tuple({Element::integer(1), Element::integer(0)}));
  Hom phi = Hom::free_product({include, include});
  std::vector<Element> universe = element_universe(source, 3, 1);
  for (const auto& u : universe) {
    for (const auto& v : universe) {
      Verdict d = source_order.compare(u, v);
      CHECK(target_order.compare(apply_hom(phi, u), apply_hom(phi, v)) == d);
    }
  }
}

TEST_CASE("kernel membership and convexity") {
  Group g = zz();
  CHECK(kernel_membership(g, word(g, "x1*x2*x1^-1*x2^-1")));
  CHECK(!kernel_membership(g, word(g, "x1")));
  CHECK(kernel_membership(g, identity(g)));

  CompiledOrder order(Ordering::standard(g), g);
  std::vector<Element> universe = element_universe(g, 4, 1);
  CHECK(!convexity_probe(order, universe).has_value());
}

TEST_CASE("witness search separates the four standard assignments") {
  Group g = zz();
  Ordering ss = std2();
  Ordering rs = Ordering::bergman({Ordering::int_rev(), Ordering::int_std()});
  Ordering sr = Ordering::bergman({Ordering::int_std(), Ordering::int_rev()});

  auto w1 = find_distinguishing_witness(ss, rs, g);
  REQUIRE(w1.has_value());
  CHECK(*w1 == word(g, "x1"));

  auto w2 = find_distinguishing_witness(ss, sr, g);
  REQUIRE(w2.has_value());
  CHECK(*w2 == word(g, "x2"));

  CHECK(!find_distinguishing_witness(ss, ss, g).has_value());
}

TEST_CASE("alpha respects the constructed order on samples") {
  Group g = zz();
  CompiledOrder order(Ordering::standard(g), g);
  CompiledOrder lex(Ordering::lex({Ordering::int_std(), Ordering::int_std()}),
                    alpha_target(g));
  std::vector<Element> universe = element_universe(g, 3, 1);
  for (const auto& u : universe)
    for (const auto& v : universe)
      if (order.compare(u, v) == Verdict::Less)
        CHECK(lex.compare(alpha(g, u), alpha(g, v)) != Verdict::Greater);
}

TEST_CASE("left-only factors leave the product order left-invariant only") {
  Group kz = Group::free_product({Group::klein_bottle(), Group::integers()});
  Ordering o = Ordering::standard(kz);
  CHECK(!is_bi_invariant(o));
  CompiledOrder order(o, kz);
  std::vector<Element> universe = element_universe(kz, 2, 1);
  Sampler sampler(37);
  for (int t = 0; t < 300; ++t) {
    const Element& u = sampler.pick(universe);
    const Element& v = sampler.pick(universe);
    const Element& w = sampler.pick(universe);
    CHECK(order.compare(multiply(kz, w, u), multiply(kz, w, v)) ==
          order.compare(u, v));
  }
  // Right multiplication by x flips the injected y against the identity.
  Element y = inject(kz, 0, Element::klein(1, 0));
  Element x = inject(kz, 0, Element::klein(0, 1));
  CHECK(order.compare(identity(kz), y) == Verdict::Less);
  CHECK(order.compare(x, multiply(kz, y, x)) == Verdict::Greater);
}
