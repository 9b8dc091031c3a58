#ifndef LADDERKIT_TEST_SUPPORT_HPP
#define LADDERKIT_TEST_SUPPORT_HPP

#include <random>

#include "ladderkit/operator_poly.hpp"

namespace ladderkit::testing {

/// Deterministic generators for property-style tests.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  Rational rational(long max_abs = 100) {
    long num = integer(-max_abs, max_abs);
    long den = integer(1, max_abs);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Scalar scalar(long max_abs = 100) {
    return Scalar{rational(max_abs), rational(max_abs), rational(max_abs), rational(max_abs),
                  UnitMonomial{integer(-2, 2), integer(-2, 2), integer(-2, 2)}};
  }

  Scalar dimensionless_scalar(long max_abs = 8) {
    return Scalar{rational(max_abs), rational(max_abs), rational(max_abs), rational(max_abs)};
  }

  OperatorPoly poly(int max_degree = 4, int terms = 4, long max_abs = 8) {
    OperatorPoly out;
    for (int t = 0; t < terms; ++t) {
      int j = static_cast<int>(integer(0, max_degree));
      int k = static_cast<int>(integer(0, max_degree - j));
      out.add_term(j, k, ScalarSum(dimensionless_scalar(max_abs)));
    }
    return out;
  }

  /// Random Hermitian perturbation of bounded degree (symmetrized).
  OperatorPoly hermitian_poly(int max_degree = 4, int terms = 3, long max_abs = 4) {
    OperatorPoly x = poly(max_degree, terms, max_abs);
    return x + dagger(x);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace ladderkit::testing

#endif
