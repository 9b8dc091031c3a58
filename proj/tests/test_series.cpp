#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladderkit/pt_engine.hpp"
#include "ladderkit/series.hpp"
#include "test_support.hpp"

using namespace ladderkit;

namespace {
const OperatorPoly kA = OperatorPoly::annihilator();
const OperatorPoly kAd = OperatorPoly::creator();

// 1/sqrt(2 hbar m omega^3) = (sqrt2/2) hbar^(-1/2) m^(-1/2) omega^(-3/2)
Scalar inv_sqrt_2hmw3() {
  return Scalar::units_scalar(Rational(1, 2), UnitMonomial{-1, -1, -3}) * Scalar::sqrt2();
}
}  // namespace

TEST_CASE("series product truncates at the common order") {
  OperatorSeries x(2, kA);
  x.at(1) = kAd;
  x.at(2) = kA;
  OperatorSeries y(2, kAd);
  y.at(2) = kAd;

  OperatorSeries prod = series_product(x, y);
  CHECK(prod.order() == 2);
  CHECK(prod.at(0) == normal_order_product(kA, kAd));
  CHECK(prod.at(1) == normal_order_product(kAd, kAd));
  CHECK(prod.at(2) == normal_order_product(kA, kAd) + normal_order_product(kA, kAd));
}

TEST_CASE("series dagger is involutive and term-wise") {
  testing::Rng rng(61);
  OperatorSeries s(3);
  for (std::size_t m = 0; m <= 3; ++m) s.at(m) = rng.poly();
  CHECK(series_dagger(series_dagger(s)) == s);
  for (std::size_t m = 0; m <= 3; ++m) CHECK(series_dagger(s).at(m) == dagger(s.at(m)));
}

TEST_CASE("inverting a + lambda c is a - lambda c") {
  Scalar c = inv_sqrt_2hmw3();
  OperatorSeries s(1, kA);
  s.at(1) = OperatorPoly(ScalarSum(c));
  OperatorSeries inv = invert_series(s);
  CHECK(inv.at(0) == kA);
  CHECK(inv.at(1) == OperatorPoly(ScalarSum(-c)));
}

TEST_CASE("inversion rejects series not led by a") {
  OperatorSeries s(1, kAd);
  CHECK_THROWS_AS(invert_series(s), std::invalid_argument);
}

TEST_CASE("V = q inversion reproduces the second-order closed form") {
  OperatorSeries alphas = alpha_corrections(OperatorPoly::position(), 2);
  OperatorSeries inv = invert_series(alphas);
  // a = a~ - lambda/sqrt(2 hbar m w^3) + lambda^2 a~/(2 hbar m w^3)
  Scalar c = inv_sqrt_2hmw3();
  CHECK(inv.at(0) == kA);
  CHECK(inv.at(1) == OperatorPoly(ScalarSum(-c)));
  CHECK(inv.at(2) == kA * ScalarSum(Scalar::units_scalar(Rational(1, 2),
                                                         UnitMonomial{-2, -2, -6})));
}

TEST_CASE("V = p^4 first-order inversion flips the correction sign") {
  OperatorPoly p4 = poly_pow(OperatorPoly::momentum(), 4);
  OperatorSeries alphas = alpha_corrections(p4, 1);
  OperatorSeries inv = invert_series(alphas);
  CHECK(inv.at(0) == kA);
  CHECK(inv.at(1) == -alphas.at(1));
}

TEST_CASE("substituting the inverse recovers a up to the truncation order") {
  testing::Rng rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    OperatorPoly V = rng.hermitian_poly(3, 2, 3);
    OperatorSeries alphas = alpha_corrections(V, 3);
    OperatorSeries inv = invert_series(alphas);
    // Evaluate the alpha series on the inverted generators.
    OperatorSeries recovered(3);
    OperatorSeries inv_d = series_dagger(inv);
    for (std::size_t m = 0; m <= 3; ++m) {
      OperatorSeries sub = series_substitute(alphas.at(m), inv, inv_d).truncated(3 - m);
      for (std::size_t l = 0; l + m <= 3; ++l) recovered.at(l + m) += sub.at(l);
    }
    CHECK(recovered.at(0) == kA);
    for (std::size_t m = 1; m <= 3; ++m) CHECK(recovered.at(m).is_zero());
  }
}
