#ifndef LADDERKIT_DIAGONAL_POLY_HPP
#define LADDERKIT_DIAGONAL_POLY_HPP

#include <string>
#include <vector>

#include "ladderkit/scalar.hpp"

namespace ladderkit {

/// Polynomial in the number operator N (equivalently in the level index n),
/// with ScalarSum coefficients. Houses energy corrections, norms and
/// expectation-value readouts as functions of the level.
class DiagonalPoly {
 public:
  DiagonalPoly() = default;
  explicit DiagonalPoly(ScalarSum constant) { set_coeff(0, std::move(constant)); }

  static DiagonalPoly zero() { return {}; }
  static DiagonalPoly one() { return DiagonalPoly(ScalarSum::one()); }
  /// The monomial N^k.
  static DiagonalPoly n_power(std::size_t k, ScalarSum c = ScalarSum::one());
  /// Falling factorial N(N-1)...(N-k+1) expanded in powers of N.
  static DiagonalPoly falling_factorial(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  ScalarSum coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : ScalarSum::zero();
  }
  void set_coeff(std::size_t k, ScalarSum c);

  bool is_real() const;

  ScalarSum eval(long n) const;
  std::complex<double> eval(long n, const UnitValues& u) const;

  DiagonalPoly operator-() const;
  DiagonalPoly& operator+=(const DiagonalPoly& o);
  DiagonalPoly& operator-=(const DiagonalPoly& o) { return *this += -o; }
  friend DiagonalPoly operator+(DiagonalPoly a, const DiagonalPoly& b) { return a += b; }
  friend DiagonalPoly operator-(DiagonalPoly a, const DiagonalPoly& b) { return a -= b; }
  friend DiagonalPoly operator*(const DiagonalPoly& a, const DiagonalPoly& b);
  friend DiagonalPoly operator*(const DiagonalPoly& a, const ScalarSum& s);
  friend bool operator==(const DiagonalPoly& a, const DiagonalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  void trim();
  std::vector<ScalarSum> coeffs_;  // coeffs_[k] multiplies N^k; no trailing zeros
};

}  // namespace ladderkit

#endif
