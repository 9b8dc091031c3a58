#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladderkit/parser.hpp"
#include "test_support.hpp"

using namespace ladderkit;

TEST_CASE("golden parses lower to the expected operators") {
  CHECK(parse_operator("p^4") == poly_pow(OperatorPoly::momentum(), 4));
  CHECK(parse_operator("q") == OperatorPoly::position());
  CHECK(parse_operator("N") == OperatorPoly::number());
  CHECK(parse_operator("ad*a") == OperatorPoly::number());
  CHECK(parse_operator("3/4 * q^2") ==
        poly_pow(OperatorPoly::position(), 2) * ScalarSum(Rational(3, 4)));

  OperatorPoly qqp = normal_order_product(poly_pow(OperatorPoly::position(), 2),
                                          OperatorPoly::momentum());
  OperatorPoly pqq = normal_order_product(OperatorPoly::momentum(),
                                          poly_pow(OperatorPoly::position(), 2));
  CHECK(parse_operator("q^2*p + p*q^2") == qqp + pqq);
}

TEST_CASE("canonical commutator from source text") {
  // [q, p] = i hbar
  Scalar ihbar = Scalar::units_scalar(Rational(1), UnitMonomial{2, 0, 0}) * Scalar::imag_unit();
  CHECK(parse_operator("q*p - p*q") == OperatorPoly(ScalarSum(ihbar)));
}

TEST_CASE("unit symbols and literals") {
  CHECK(parse_operator("hbar*m*omega^2") ==
        OperatorPoly(ScalarSum(Scalar::units_scalar(Rational(1), UnitMonomial{2, 2, 4}))));
  CHECK(parse_operator("sqrt2*sqrt2") == OperatorPoly(ScalarSum(Rational(2))));
  CHECK(parse_operator("i^2") == OperatorPoly(ScalarSum(Rational(-1))));
  CHECK(parse_operator("-(q - q)").is_zero());
}

TEST_CASE("parse errors carry the byte offset of the failure") {
  try {
    parse("q +");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }

  try {
    parse("q + x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }

  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("q^"), ParseError);
  CHECK_THROWS_AS(parse("(q"), ParseError);
  CHECK_THROWS_AS(parse("q^-2"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
}

TEST_CASE("emit round-trips through parse") {
  for (const std::string src :
       {"p^4", "q^2*p + p*q^2", "q*p - p*q", "3/4*q^2 + hbar*omega*N", "-(q + i*p)^2",
        "sqrt2*ad^3 - 2*a"}) {
    auto ast = parse(src);
    std::string emitted = emit(*ast);
    auto again = parse(emitted);
    CHECK(emit(*again) == emitted);
    CHECK(lower(*again) == lower(*ast));
  }
}

TEST_CASE("lowering is a homomorphism on sums and products") {
  CHECK(parse_operator("(q + p)^2") ==
        normal_order_product(parse_operator("q + p"), parse_operator("q + p")));
  CHECK(parse_operator("q*(p + N)") ==
        normal_order_product(parse_operator("q"), parse_operator("p + N")));
  CHECK(parse_operator("q + p") == parse_operator("q") + parse_operator("p"));
}

TEST_CASE("hermiticity gate") {
  CHECK(require_hermitian(parse_operator("q")).hermitian);
  CHECK(require_hermitian(parse_operator("p^4")).hermitian);
  CHECK(require_hermitian(parse_operator("q*p + p*q")).hermitian);
  CHECK(require_hermitian(parse_operator("i*(a - ad)")).hermitian);

  HermiticityResult bad = require_hermitian(parse_operator("q + i*p"));
  CHECK_FALSE(bad.hermitian);
  CHECK_FALSE(bad.residue.is_zero());
  CHECK(bad.residue == parse_operator("q + i*p") - dagger(parse_operator("q + i*p")));

  CHECK_FALSE(require_hermitian(parse_operator("a")).hermitian);
}
