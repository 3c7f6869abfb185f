#include <doctest.h>

#include "fgr/parse.hpp"
#include "generators.hpp"

using namespace fgr;

TEST_CASE("basis expressions") {
  CHECK(parse_basis_expr("p3") == BasisCombo({Family::P, 3}));
  const BasisCombo c = parse_basis_expr("2*sqrt2*b3 - b5");
  CHECK(c.size() == 2);
  CHECK(c.coefficient({Family::B, 3}) == FieldElem(Rational(2)) * FieldElem::sqrt2());
  CHECK(c.coefficient({Family::B, 5}) == FieldElem(Rational(-1)));
  CHECK(parse_basis_expr("(1/2*log2 + 9/4)*p1 + (-4*log2 - 6)*p3") ==
        FieldElem(Rational(1, 2)) * FieldElem::log2() * BasisCombo({Family::P, 1}) +
            FieldElem(Rational(9, 4)) * BasisCombo({Family::P, 1}) -
            (FieldElem(Rational(4)) * FieldElem::log2() + FieldElem(Rational(6))) * BasisCombo({Family::P, 3}));
  CHECK(parse_basis_expr("p3/sqrt2") == FieldElem(Rational(1, 2)) * FieldElem::sqrt2() * BasisCombo({Family::P, 3}));
  CHECK(parse_basis_expr("p1 - p1").empty());
  CHECK(parse_basis_expr("0").empty());
}

TEST_CASE("scalar expressions") {
  CHECK(parse_scalar_expr("-13*log2 - 71") == FieldElem(Rational(-13)) * FieldElem::log2() - FieldElem(Rational(71)));
  CHECK(parse_scalar_expr("sqrt2*sqrt2") == FieldElem(Rational(2)));
  CHECK(parse_scalar_expr("sqrt2^3") == FieldElem(Rational(2)) * FieldElem::sqrt2());
  CHECK(parse_scalar_expr("4*log2^2") == FieldElem(Rational(4)) * FieldElem::log2() * FieldElem::log2());
}

TEST_CASE("errors") {
  CHECK_THROWS_WITH_AS(parse_basis_expr("z9"), doctest::Contains("unknown family"), ParseError);
  CHECK_THROWS_WITH_AS(parse_basis_expr("p0"), doctest::Contains("positive"), ParseError);
  CHECK_THROWS_WITH_AS(parse_basis_expr("p1*p3"), doctest::Contains("product"), ParseError);
  CHECK_THROWS_WITH_AS(parse_basis_expr("p1/log2"), doctest::Contains("divide"), ParseError);
  CHECK_THROWS_WITH_AS(parse_basis_expr("p1 + 2"), doctest::Contains("constant"), ParseError);
  CHECK_THROWS_AS(parse_basis_expr(""), ParseError);
  CHECK_THROWS_AS(parse_basis_expr("p1 +"), ParseError);
  CHECK_THROWS_AS(parse_basis_expr("(p1"), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr("p1"), ParseError);
  CHECK_THROWS_AS(parse_basis_expr("p1^2"), ParseError);
  CHECK_THROWS_AS(parse_scalar_expr("log2^"), ParseError);
  try {
    static_cast<void>(parse_basis_expr("p1 + z3"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("property: to_string round trips") {
  testgen::Rng rng(606);
  for (int i = 0; i < 500; ++i) {
    const BasisCombo c = testgen::combo(rng);
    REQUIRE(parse_basis_expr(c.to_string()) == c);
    REQUIRE(BasisCombo::from_json(c.to_json()) == c);
  }
}
