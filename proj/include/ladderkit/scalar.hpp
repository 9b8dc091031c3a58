#ifndef LADDERKIT_SCALAR_HPP
#define LADDERKIT_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ladderkit {

using Rational = mpq_class;

/// Dimensional monomial hbar^(hbar2/2) m^(mass2/2) omega^(omega2/2).
/// Exponents are stored doubled so half-integer powers stay integral.
struct UnitMonomial {
  std::int64_t hbar2 = 0;
  std::int64_t mass2 = 0;
  std::int64_t omega2 = 0;

  friend UnitMonomial operator+(UnitMonomial a, UnitMonomial b) {
    return {a.hbar2 + b.hbar2, a.mass2 + b.mass2, a.omega2 + b.omega2};
  }
  friend UnitMonomial operator-(UnitMonomial a, UnitMonomial b) {
    return {a.hbar2 - b.hbar2, a.mass2 - b.mass2, a.omega2 - b.omega2};
  }
  friend auto operator<=>(const UnitMonomial&, const UnitMonomial&) = default;
};

/// Numeric values substituted for the dimensional symbols.
struct UnitValues {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
};

/// Element of Q(i, sqrt2) times a unit monomial:
///   (re + re_s2*sqrt2) + (im + im_s2*sqrt2)*i, all parts rational.
class Scalar {
 public:
  Rational re, re_s2, im, im_s2;
  UnitMonomial units;

  Scalar() = default;
  explicit Scalar(Rational r, UnitMonomial u = {}) : re(std::move(r)), units(u) {
    canonicalize();
  }
  Scalar(Rational r, Rational rs2, Rational i, Rational is2, UnitMonomial u = {})
      : re(std::move(r)), re_s2(std::move(rs2)), im(std::move(i)), im_s2(std::move(is2)), units(u) {
    canonicalize();
  }

  static Scalar zero() { return Scalar{}; }
  static Scalar one() { return Scalar{Rational(1)}; }
  static Scalar imag_unit() { return Scalar{Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static Scalar sqrt2() { return Scalar{Rational(0), Rational(1), Rational(0), Rational(0)}; }

  /// Rational multiple of a unit monomial, e.g. units_scalar(1, {2,0,2}) = hbar*omega.
  static Scalar units_scalar(Rational r, UnitMonomial u) { return Scalar{std::move(r), u}; }

  bool is_zero() const {
    return re == 0 && re_s2 == 0 && im == 0 && im_s2 == 0;
  }
  bool is_real() const { return im == 0 && im_s2 == 0; }

  Scalar conj() const {
    return Scalar{re, re_s2, -im, -im_s2, units};
  }

  Scalar operator-() const { return Scalar{-re, -re_s2, -im, -im_s2, units}; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    // Complex product with components in Q(sqrt2); sqrt2*sqrt2 = 2.
    auto mul = [](const Rational& x, const Rational& xs, const Rational& y,
                  const Rational& ys) {
      return std::pair<Rational, Rational>{x * y + 2 * xs * ys, x * ys + xs * y};
    };
    auto [rr, rr2] = mul(a.re, a.re_s2, b.re, b.re_s2);
    auto [ii, ii2] = mul(a.im, a.im_s2, b.im, b.im_s2);
    auto [ri, ri2] = mul(a.re, a.re_s2, b.im, b.im_s2);
    auto [ir, ir2] = mul(a.im, a.im_s2, b.re, b.re_s2);
    return Scalar{rr - ii, rr2 - ii2, ri + ir, ri2 + ir2, a.units + b.units};
  }

  friend Scalar operator*(const Scalar& a, const Rational& r) {
    return Scalar{a.re * r, a.re_s2 * r, a.im * r, a.im_s2 * r, a.units};
  }
  friend Scalar operator*(const Rational& r, const Scalar& a) { return a * r; }

  friend Scalar operator/(const Scalar& a, const Rational& r) {
    return Scalar{a.re / r, a.re_s2 / r, a.im / r, a.im_s2 / r, a.units};
  }

  /// Exact inverse of a nonzero element; units negate.
  Scalar inverse() const;

  /// Addition requires matching units (ScalarSum handles the mixed case).
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.units == b.units && a.re == b.re && a.re_s2 == b.re_s2 && a.im == b.im &&
           a.im_s2 == b.im_s2;
  }

  std::complex<double> eval(const UnitValues& u = {}) const;

  std::string str() const;

 private:
  void canonicalize() {
    re.canonicalize();
    re_s2.canonicalize();
    im.canonicalize();
    im_s2.canonicalize();
  }
};

/// Sum of Scalars with pairwise distinct unit monomials. The coefficient
/// type actually used by operator polynomials, so mixed-dimension
/// perturbations like q + p^4 work.
class ScalarSum {
 public:
  ScalarSum() = default;
  ScalarSum(Scalar s) { if (!s.is_zero()) parts_.push_back(std::move(s)); }
  ScalarSum(Rational r) : ScalarSum(Scalar{std::move(r)}) {}

  static ScalarSum zero() { return {}; }
  static ScalarSum one() { return ScalarSum(Scalar::one()); }

  const std::vector<Scalar>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  /// True when the sum is a single unit-monomial term.
  bool is_monomial() const { return parts_.size() == 1; }

  ScalarSum conj() const;
  ScalarSum operator-() const;

  ScalarSum& operator+=(const Scalar& s);
  ScalarSum& operator+=(const ScalarSum& o);
  ScalarSum& operator-=(const ScalarSum& o) { return *this += -o; }

  friend ScalarSum operator+(ScalarSum a, const ScalarSum& b) { return a += b; }
  friend ScalarSum operator-(ScalarSum a, const ScalarSum& b) { return a -= b; }
  friend ScalarSum operator*(const ScalarSum& a, const ScalarSum& b);
  friend ScalarSum operator*(const ScalarSum& a, const Scalar& s);
  friend ScalarSum operator*(const ScalarSum& a, const Rational& r);
  friend ScalarSum operator/(const ScalarSum& a, const Rational& r);

  friend bool operator==(const ScalarSum& a, const ScalarSum& b) {
    return a.parts_ == b.parts_;
  }

  std::complex<double> eval(const UnitValues& u = {}) const;
  std::string str() const;

 private:
  // Sorted by units, no zero entries.
  std::vector<Scalar> parts_;
};

}  // namespace ladderkit

#endif
