#include "ladderkit/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ladderkit {

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.units != b.units) {
    throw std::invalid_argument("Scalar addition with mismatched unit monomials");
  }
  return Scalar{a.re + b.re, a.re_s2 + b.re_s2, a.im + b.im, a.im_s2 + b.im_s2, a.units};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("Scalar inverse of zero");
  // 1/z for z = x + y*sqrt2 with x, y Gaussian rationals:
  // multiply by (x - y*sqrt2), reducing to a Gaussian-rational inverse.
  Scalar flip{re, -re_s2, im, -im_s2, UnitMonomial{}};
  Scalar base{re, re_s2, im, im_s2, UnitMonomial{}};
  Scalar g = base * flip;  // in Q(i): g.re_s2 == g.im_s2 == 0
  // Gaussian norm g * conj(g) is a positive rational.
  Rational norm = g.re * g.re + g.im * g.im;
  Scalar inv_g = Scalar{g.re / norm, Rational(0), -g.im / norm, Rational(0)};
  Scalar out = flip * inv_g;
  out.units = UnitMonomial{} - units;
  return out;
}

std::complex<double> Scalar::eval(const UnitValues& u) const {
  const double s2 = std::sqrt(2.0);
  double r = re.get_d() + re_s2.get_d() * s2;
  double i = im.get_d() + im_s2.get_d() * s2;
  double scale = std::pow(u.hbar, units.hbar2 / 2.0) * std::pow(u.mass, units.mass2 / 2.0) *
                 std::pow(u.omega, units.omega2 / 2.0);
  return {r * scale, i * scale};
}

namespace {

void append_part(std::ostringstream& os, const Rational& r, const char* sym, bool& first) {
  if (r == 0) return;
  if (!first && r > 0) os << "+";
  if (r == -1 && *sym) {
    os << "-";
  } else if (!(r == 1 && *sym)) {
    os << r.get_str();
    if (*sym) os << "*";
  }
  os << sym;
  first = false;
}

void append_unit(std::ostringstream& os, const char* name, std::int64_t e2) {
  if (e2 == 0) return;
  os << "*" << name << "^";
  if (e2 % 2 == 0) {
    os << e2 / 2;
  } else {
    os << "(" << e2 << "/2)";
  }
}

}  // namespace

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  os << "(";
  append_part(os, re, "", first);
  append_part(os, re_s2, "sqrt2", first);
  append_part(os, im, "i", first);
  append_part(os, im_s2, "i*sqrt2", first);
  if (first) os << "0";
  os << ")";
  append_unit(os, "hbar", units.hbar2);
  append_unit(os, "m", units.mass2);
  append_unit(os, "omega", units.omega2);
  return os.str();
}

ScalarSum ScalarSum::conj() const {
  ScalarSum out;
  out.parts_.reserve(parts_.size());
  for (const auto& p : parts_) out.parts_.push_back(p.conj());
  return out;
}

ScalarSum ScalarSum::operator-() const {
  ScalarSum out;
  out.parts_.reserve(parts_.size());
  for (const auto& p : parts_) out.parts_.push_back(-p);
  return out;
}

ScalarSum& ScalarSum::operator+=(const Scalar& s) {
  if (s.is_zero()) return *this;
  auto it = std::lower_bound(parts_.begin(), parts_.end(), s.units,
                             [](const Scalar& a, const UnitMonomial& u) { return a.units < u; });
  if (it != parts_.end() && it->units == s.units) {
    *it = *it + s;
    if (it->is_zero()) parts_.erase(it);
  } else {
    parts_.insert(it, s);
  }
  return *this;
}

ScalarSum& ScalarSum::operator+=(const ScalarSum& o) {
  for (const auto& p : o.parts_) *this += p;
  return *this;
}

ScalarSum operator*(const ScalarSum& a, const ScalarSum& b) {
  ScalarSum out;
  for (const auto& x : a.parts_)
    for (const auto& y : b.parts_) out += x * y;
  return out;
}

ScalarSum operator*(const ScalarSum& a, const Scalar& s) {
  ScalarSum out;
  for (const auto& x : a.parts_) out += x * s;
  return out;
}

ScalarSum operator*(const ScalarSum& a, const Rational& r) {
  if (r == 0) return {};
  ScalarSum out;
  for (const auto& x : a.parts_) out += x * r;
  return out;
}

ScalarSum operator/(const ScalarSum& a, const Rational& r) {
  ScalarSum out;
  for (const auto& x : a.parts_) out += x / r;
  return out;
}

std::complex<double> ScalarSum::eval(const UnitValues& u) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& p : parts_) acc += p.eval(u);
  return acc;
}

std::string ScalarSum::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " + ";
    os << parts_[i].str();
  }
  return os.str();
}

}  // namespace ladderkit
