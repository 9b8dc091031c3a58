#ifndef LADDERKIT_OPERATOR_POLY_HPP
#define LADDERKIT_OPERATOR_POLY_HPP

#include <map>
#include <string>
#include <utility>

#include "ladderkit/diagonal_poly.hpp"
#include "ladderkit/scalar.hpp"

namespace ladderkit {

/// Key of a normal-ordered term ad^dag a^ann.
struct TermKey {
  int dag = 0;
  int ann = 0;
  /// Level shift the term induces (the paper's b - c with b daggers).
  int excess() const { return dag - ann; }
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Boson operator polynomial in canonical normal-ordered form:
/// a finite sum of ScalarSum * ad^j a^k with every ad left of every a.
/// Immutable-style value type; equality is map equality.
class OperatorPoly {
 public:
  using TermMap = std::map<TermKey, ScalarSum>;

  OperatorPoly() = default;
  explicit OperatorPoly(ScalarSum c) { add_term(0, 0, std::move(c)); }

  static OperatorPoly zero() { return {}; }
  static OperatorPoly identity() { return OperatorPoly(ScalarSum::one()); }
  static OperatorPoly annihilator();               // a
  static OperatorPoly creator();                   // ad
  static OperatorPoly number();                    // N = ad a
  static OperatorPoly position();                  // q = sqrt(hbar/2 m w) (a + ad)
  static OperatorPoly momentum();                  // p = i sqrt(hbar m w / 2) (ad - a)
  /// ad^j a^k with unit coefficient.
  static OperatorPoly monomial(int dag, int ann, ScalarSum c = ScalarSum::one());

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max of dag+ann over terms (0 for the zero polynomial).
  int degree() const;

  void add_term(int dag, int ann, ScalarSum c);
  ScalarSum coeff(int dag, int ann) const;

  OperatorPoly operator-() const;
  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(const OperatorPoly& a, const ScalarSum& s);
  friend OperatorPoly operator*(const ScalarSum& s, const OperatorPoly& a) { return a * s; }
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  TermMap terms_;  // no zero coefficients stored
};

/// Canonical normal-ordered product, using
/// a^k ad^j = sum_s s! C(k,s) C(j,s) ad^(j-s) a^(k-s).
OperatorPoly normal_order_product(const OperatorPoly& x, const OperatorPoly& y);

/// xy - yx in canonical form.
OperatorPoly commutator(const OperatorPoly& x, const OperatorPoly& y);

/// Hermitian conjugate: (j,k,c) -> (k,j,conj c).
OperatorPoly dagger(const OperatorPoly& x);

bool is_hermitian(const OperatorPoly& x);

/// Bar transform: term (j,k) scaled by 1/(k-j); balanced terms dropped.
/// Equals the oscillator resolvent action up to 1/(hbar omega).
OperatorPoly bar(const OperatorPoly& x);

/// Check transform: keeps exactly the balanced (j == k) terms.
OperatorPoly check(const OperatorPoly& x);

/// Diagonal part as a polynomial in N: ad^k a^k = N(N-1)...(N-k+1).
/// Non-diagonal terms are ignored.
DiagonalPoly diagonal_as_npoly(const OperatorPoly& x);

/// Integer power with normal ordering.
OperatorPoly poly_pow(const OperatorPoly& x, unsigned e);

/// Matrix-element amplitude functions: for each level shift e, the
/// polynomial P_e with  <n+e| x |n> = P_e(n) * sqrt(n falling^(-e))   (e < 0)
///                                  = P_e(n) * sqrt((n+1) rising^e)   (e > 0)
///                                  = P_e(n)                          (e = 0).
std::map<int, DiagonalPoly> shift_amplitudes(const OperatorPoly& x);

}  // namespace ladderkit

#endif
