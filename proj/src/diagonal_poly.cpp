#include "ladderkit/diagonal_poly.hpp"

#include <sstream>

namespace ladderkit {

DiagonalPoly DiagonalPoly::n_power(std::size_t k, ScalarSum c) {
  DiagonalPoly p;
  p.set_coeff(k, std::move(c));
  return p;
}

DiagonalPoly DiagonalPoly::falling_factorial(std::size_t k) {
  DiagonalPoly p = one();
  for (std::size_t i = 0; i < k; ++i) {
    // p *= (N - i)
    DiagonalPoly factor;
    factor.set_coeff(0, ScalarSum(Rational(-static_cast<long>(i))));
    factor.set_coeff(1, ScalarSum::one());
    p = p * factor;
  }
  return p;
}

void DiagonalPoly::set_coeff(std::size_t k, ScalarSum c) {
  if (k >= coeffs_.size()) {
    if (c.is_zero()) return;
    coeffs_.resize(k + 1);
  }
  coeffs_[k] = std::move(c);
  trim();
}

bool DiagonalPoly::is_real() const {
  for (const auto& c : coeffs_)
    for (const auto& p : c.parts())
      if (!p.is_real()) return false;
  return true;
}

ScalarSum DiagonalPoly::eval(long n) const {
  ScalarSum acc;
  Rational np(1);
  for (const auto& c : coeffs_) {
    acc += c * np;
    np *= n;
  }
  return acc;
}

std::complex<double> DiagonalPoly::eval(long n, const UnitValues& u) const {
  return eval(n).eval(u);
}

DiagonalPoly DiagonalPoly::operator-() const {
  DiagonalPoly out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

DiagonalPoly& DiagonalPoly::operator+=(const DiagonalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

DiagonalPoly operator*(const DiagonalPoly& a, const DiagonalPoly& b) {
  DiagonalPoly out;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
  out.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.trim();
  return out;
}

DiagonalPoly operator*(const DiagonalPoly& a, const ScalarSum& s) {
  DiagonalPoly out;
  out.coeffs_.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) out.coeffs_.push_back(c * s);
  out.trim();
  return out;
}

void DiagonalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string DiagonalPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "[" << coeffs_[k].str() << "]";
    if (k == 1) os << "*n";
    if (k > 1) os << "*n^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace ladderkit
