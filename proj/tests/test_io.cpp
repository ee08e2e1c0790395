#include <doctest.h>

#include "ordfree/enumerate.hpp"
#include "ordfree/io.hpp"

using namespace ordfree;

TEST_CASE("group grammar: chains flatten, parentheses nest, mixed goes left") {
  CHECK(parse_group("Z") == Group::integers());
  CHECK(parse_group("K") == Group::klein_bottle());
  Group z = Group::integers();
  CHECK(parse_group("Z*Z*Z") == Group::free_product({z, z, z}));
  CHECK(parse_group("(Z*Z)*Z") ==
        Group::free_product({Group::free_product({z, z}), z}));
  CHECK(parse_group("ZxZ") == Group::direct_product({z, z}));
  CHECK(parse_group("Z*ZxZ") ==
        Group::direct_product({Group::free_product({z, z}), z}));
  CHECK(parse_group(" ( Z x Z ) * K ") ==
        Group::free_product({Group::direct_product({z, z}),
                             Group::klein_bottle()}));
  CHECK_THROWS_AS(parse_group("Z*"), ParseError);
  CHECK_THROWS_AS(parse_group("Q"), ParseError);
  CHECK_THROWS_AS(parse_group("Z Z"), ParseError);
}

TEST_CASE("element grammar with global generator numbers") {
  Group g = parse_group("Z*Z");
  CHECK(parse_element("x1^2*x2^-1", g) ==
        Element::word({{0, Element::integer(2)}, {1, Element::integer(-1)}}));
  CHECK(parse_element("1", g) == identity(g));
  CHECK(parse_element("x1*x1^-1", g) == identity(g));

  Group k = Group::klein_bottle();
  CHECK(parse_element("x2*x1", k) == Element::klein(-1, 1));
  CHECK(parse_element("x1^2*x2^3", k) == Element::klein(2, 3));

  Group d = parse_group("ZxZ");
  CHECK(parse_element("(x1^2, x2^-1)", d) ==
        Element::tuple({Element::integer(2), Element::integer(-1)}));
  CHECK(parse_element("x1^2*x2^-1", d) ==
        Element::tuple({Element::integer(2), Element::integer(-1)}));

  Group nested = parse_group("(ZxZ)*Z");
  CHECK(parse_element("x1*x2^2*x3^-1", nested) ==
        Element::word({{0, Element::tuple({Element::integer(1),
                                           Element::integer(2)})},
                       {1, Element::integer(-1)}}));

  CHECK_THROWS_AS(parse_element("x3", g), ParseError);
  CHECK_THROWS_AS(parse_element("(x1, x2)", g), ParseError);
  CHECK_THROWS_AS(parse_element("x1^", g), ParseError);
}

TEST_CASE("ordering grammar and validation") {
  Group g = parse_group("Z*Z");
  CHECK(parse_order("bergman(std,rev)", g) ==
        Ordering::bergman({Ordering::int_std(), Ordering::int_rev()}));
  CHECK(parse_order("default", g) == Ordering::standard(g));
  CHECK(parse_order("pullback(lex(std,std))", g) ==
        Ordering::product_pullback(
            Ordering::lex({Ordering::int_std(), Ordering::int_std()})));

  Group d = parse_group("ZxZ");
  CHECK(parse_order("veclex[[1,1];[0,1]]", d) ==
        Ordering::vec_lex({{BigInt(1), BigInt(1)}, {BigInt(0), BigInt(1)}}));
  CHECK(parse_order("default", parse_group("K")) == Ordering::klein_left());

  CHECK_THROWS_AS(parse_order("bergman(std,std)", d), ShapeMismatchError);
  CHECK_THROWS_AS(parse_order("veclex[[1,1]]", d), DegenerateVecLexError);
  CHECK_THROWS_AS(parse_order("sideways", d), ParseError);
  CHECK_THROWS_AS(parse_order("lex(std)", d), ShapeMismatchError);
}

TEST_CASE("braid grammar") {
  BraidWord b = parse_braid("s1 s2^-1 s1", 3);
  CHECK(b.letters ==
        std::vector<std::pair<int, int>>{{1, 1}, {2, -1}, {1, 1}});
  CHECK(parse_braid("", 5).letters.empty());
  CHECK_THROWS_AS(parse_braid("s3", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^2", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("t1", 3), ParseError);
}

TEST_CASE("printing round-trips groups, orders, elements and braids") {
  std::vector<std::string> group_texts = {
      "Z",       "K",           "Z*Z",       "Z*Z*Z", "(Z*Z)*Z",
      "Zx(K*Z)", "(ZxZ)*(ZxZ)", "K*Z",       "ZxZxZ", "(Z*Z)x(Z*Z)",
  };
  for (const auto& text : group_texts) {
    Group g = parse_group(text);
    CHECK(parse_group(print_group(g)) == g);
  }

  for (const auto& text : group_texts) {
    Group g = parse_group(text);
    Ordering o = Ordering::standard(g);
    CHECK(parse_order(print_order(o), g) == o);
    std::vector<Element> universe = element_universe(g, 2, 2);
    for (const auto& e : universe)
      CHECK(parse_element(print_element(e, g), g) == e);
  }

  Group d = parse_group("ZxZ");
  Ordering rows =
      Ordering::vec_lex({{BigInt(2), BigInt(-1)}, {BigInt(0), BigInt(7)}});
  CHECK(print_order(rows) == "veclex[[2,-1];[0,7]]");
  CHECK(parse_order(print_order(rows), d) == rows);

  Group g2 = parse_group("Z*Z");
  Ordering pullback = Ordering::product_pullback(
      Ordering::lex({Ordering::int_rev(), Ordering::int_std()}));
  CHECK(parse_order(print_order(pullback), g2) == pullback);

  BraidWord braid = parse_braid("s1 s2^-1", 3);
  CHECK(print_braid(braid) == "s1 s2^-1");
}

TEST_CASE("big exponents survive the round trip") {
  Group g = parse_group("Z*Z");
  Element e = parse_element("x1^123456789012345678901234567890*x2^-7", g);
  CHECK(print_element(e, g) == "x1^123456789012345678901234567890*x2^-7");
  CHECK(parse_element(print_element(e, g), g) == e);
}

TEST_CASE("certificate JSON round-trips and keeps key order") {
  Group g = parse_group("Z*Z");
  Ordering o = Ordering::standard(g);
  CompiledOrder order(o, g);
  Element u = parse_element("x1*x2^-1", g);
  Element v = parse_element("x2*x1", g);
  Certificate cert;
  CompareContext recording = CompareContext::recording(cert);
  Verdict direct = order.compare(u, v, &recording);
  REQUIRE(!cert.empty());

  std::string json = certificate_to_json(cert, o, g);
  CHECK(json.find("\"leaf\"") != std::string::npos);
  CHECK(json.find("\"leaf\"") < json.find("\"lhs\""));
  CHECK(json.find("\"lhs\"") < json.find("\"rhs\""));
  CHECK(json.find("\"rhs\"") < json.find("\"verdict\""));

  Certificate loaded = certificate_from_json(json, o, g);
  CHECK(loaded.size() == cert.size());
  CHECK(replay(loaded, o, g, u, v) == direct);
  CHECK(certificate_is_sound(loaded, o, g));
}

TEST_CASE("matrix printing is readable") {
  Group g = parse_group("Z*Z");
  PolyMatrix2 m = rho(g, parse_element("x1", g));
  std::string text = matrix_to_string(m);
  CHECK(text.find("(x1, 1)") != std::string::npos);
  CHECK(text.find("*t") != std::string::npos);
  CHECK(poly_to_string(Poly{m.carrier()}, m.carrier()) == "0");
}
