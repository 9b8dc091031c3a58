#include "ladderkit/operator_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ladderkit {

namespace {

// s! C(k,s) C(j,s) as an exact integer.
Rational contraction_weight(int k, int j, int s) {
  mpz_class w = 1;
  for (int t = 0; t < s; ++t) {
    w *= (k - t);
    w *= (j - t);
  }
  mpz_class fact = 1;
  for (int t = 2; t <= s; ++t) fact *= t;
  return Rational(w) / Rational(fact);
}

// Linear polynomial N + c with integer c.
DiagonalPoly n_plus(long c) {
  DiagonalPoly p;
  p.set_coeff(1, ScalarSum::one());
  p.set_coeff(0, ScalarSum(Rational(c)));
  return p;
}

}  // namespace

OperatorPoly OperatorPoly::annihilator() { return monomial(0, 1); }
OperatorPoly OperatorPoly::creator() { return monomial(1, 0); }
OperatorPoly OperatorPoly::number() { return monomial(1, 1); }

OperatorPoly OperatorPoly::position() {
  // q = sqrt(hbar / 2 m omega) (a + ad)
  Scalar c = Scalar::units_scalar(Rational(1, 2), UnitMonomial{1, -1, -1}) * Scalar::sqrt2();
  // (1/2) sqrt2 * sqrt(hbar/(m omega)) == sqrt(hbar/(2 m omega))
  OperatorPoly out = monomial(0, 1, ScalarSum(c));
  out += monomial(1, 0, ScalarSum(c));
  return out;
}

OperatorPoly OperatorPoly::momentum() {
  // p = i sqrt(hbar m omega / 2) (ad - a)
  Scalar c = Scalar{Rational(0), Rational(0), Rational(0), Rational(1, 2),
                    UnitMonomial{1, 1, 1}};
  // i (1/2) sqrt2 sqrt(hbar m omega) == i sqrt(hbar m omega / 2)
  OperatorPoly out = monomial(1, 0, ScalarSum(c));
  out -= monomial(0, 1, ScalarSum(c));
  return out;
}

OperatorPoly OperatorPoly::monomial(int dag, int ann, ScalarSum c) {
  OperatorPoly out;
  out.add_term(dag, ann, std::move(c));
  return out;
}

int OperatorPoly::degree() const {
  int d = 0;
  for (const auto& [key, _] : terms_) d = std::max(d, key.dag + key.ann);
  return d;
}

void OperatorPoly::add_term(int dag, int ann, ScalarSum c) {
  if (c.is_zero()) return;
  TermKey key{dag, ann};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarSum OperatorPoly::coeff(int dag, int ann) const {
  auto it = terms_.find(TermKey{dag, ann});
  return it == terms_.end() ? ScalarSum::zero() : it->second;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.dag, key.ann, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.dag, key.ann, -c);
  return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const ScalarSum& s) {
  OperatorPoly out;
  for (const auto& [key, c] : a.terms()) out.add_term(key.dag, key.ann, c * s);
  return out;
}

OperatorPoly normal_order_product(const OperatorPoly& x, const OperatorPoly& y) {
  OperatorPoly out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      ScalarSum c = cx * cy;
      // (ad^j1 a^k1)(ad^j2 a^k2): reorder the middle a^k1 ad^j2.
      const int smax = std::min(kx.ann, ky.dag);
      for (int s = 0; s <= smax; ++s) {
        out.add_term(kx.dag + ky.dag - s, kx.ann + ky.ann - s,
                     c * contraction_weight(kx.ann, ky.dag, s));
      }
    }
  }
  return out;
}

OperatorPoly commutator(const OperatorPoly& x, const OperatorPoly& y) {
  return normal_order_product(x, y) - normal_order_product(y, x);
}

OperatorPoly dagger(const OperatorPoly& x) {
  OperatorPoly out;
  for (const auto& [key, c] : x.terms()) out.add_term(key.ann, key.dag, c.conj());
  return out;
}

bool is_hermitian(const OperatorPoly& x) { return dagger(x) == x; }

OperatorPoly bar(const OperatorPoly& x) {
  OperatorPoly out;
  for (const auto& [key, c] : x.terms()) {
    const int d = key.ann - key.dag;  // the paper's c - b
    if (d == 0) continue;
    out.add_term(key.dag, key.ann, c / Rational(d));
  }
  return out;
}

OperatorPoly check(const OperatorPoly& x) {
  OperatorPoly out;
  for (const auto& [key, c] : x.terms())
    if (key.dag == key.ann) out.add_term(key.dag, key.ann, c);
  return out;
}

DiagonalPoly diagonal_as_npoly(const OperatorPoly& x) {
  DiagonalPoly out;
  for (const auto& [key, c] : x.terms())
    if (key.dag == key.ann) out += DiagonalPoly::falling_factorial(key.dag) * c;
  return out;
}

OperatorPoly poly_pow(const OperatorPoly& x, unsigned e) {
  OperatorPoly out = OperatorPoly::identity();
  for (unsigned i = 0; i < e; ++i) out = normal_order_product(out, x);
  return out;
}

std::map<int, DiagonalPoly> shift_amplitudes(const OperatorPoly& x) {
  std::map<int, DiagonalPoly> out;
  for (const auto& [key, c] : x.terms()) {
    const int e = key.excess();
    DiagonalPoly poly;
    if (e <= 0) {
      // <n+e| ad^j a^k |n> = sqrt(n^(k-j falling)) * prod_{t=1..j} (n - k + t)
      poly = DiagonalPoly::one();
      for (int t = 1; t <= key.dag; ++t) poly = poly * n_plus(t - key.ann);
    } else {
      // = (n falling^k) * sqrt((n+1) rising^e)
      poly = DiagonalPoly::falling_factorial(key.ann);
    }
    out[e] += poly * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string OperatorPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    os << c.str();
    if (key.dag >= 1) {
      os << " ad";
      if (key.dag > 1) os << "^" << key.dag;
    }
    if (key.ann >= 1) {
      os << " a";
      if (key.ann > 1) os << "^" << key.ann;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ladderkit
