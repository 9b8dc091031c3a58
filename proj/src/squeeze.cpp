#include "ladderkit/squeeze.hpp"

#include <algorithm>
#include <cmath>

namespace ladderkit {

namespace {
constexpr double kDropTol = 1e-15;

double contraction_weight(int k, int j, int s) {
  double w = 1.0;
  for (int t = 0; t < s; ++t) w *= static_cast<double>(k - t) * static_cast<double>(j - t);
  for (int t = 2; t <= s; ++t) w /= static_cast<double>(t);
  return w;
}
}  // namespace

NumericPoly NumericPoly::from_exact(const OperatorPoly& p, const UnitValues& u) {
  NumericPoly out;
  for (const auto& [key, c] : p.terms()) out.add_term(key.dag, key.ann, c.eval(u));
  return out;
}

void NumericPoly::add_term(int dag, int ann, Complex c) {
  TermKey key{dag, ann};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(c) > kDropTol) terms_.emplace(key, c);
  } else {
    it->second += c;
    if (std::abs(it->second) <= kDropTol) terms_.erase(it);
  }
}

NumericPoly::Complex NumericPoly::coeff(int dag, int ann) const {
  auto it = terms_.find(TermKey{dag, ann});
  return it == terms_.end() ? Complex{} : it->second;
}

double NumericPoly::max_abs_coeff() const {
  double worst = 0.0;
  for (const auto& [_, c] : terms_) worst = std::max(worst, std::abs(c));
  return worst;
}

NumericPoly NumericPoly::dagger() const {
  NumericPoly out;
  for (const auto& [key, c] : terms_) out.add_term(key.ann, key.dag, std::conj(c));
  return out;
}

NumericPoly& NumericPoly::operator+=(const NumericPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.dag, key.ann, c);
  return *this;
}

NumericPoly& NumericPoly::operator-=(const NumericPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.dag, key.ann, -c);
  return *this;
}

NumericPoly operator*(const NumericPoly& a, NumericPoly::Complex s) {
  NumericPoly out;
  for (const auto& [key, c] : a.terms()) out.add_term(key.dag, key.ann, c * s);
  return out;
}

NumericPoly normal_order_product(const NumericPoly& x, const NumericPoly& y) {
  NumericPoly out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto c = cx * cy;
      const int smax = std::min(kx.ann, ky.dag);
      for (int s = 0; s <= smax; ++s) {
        out.add_term(kx.dag + ky.dag - s, kx.ann + ky.ann - s, c * contraction_weight(kx.ann, ky.dag, s));
      }
    }
  }
  return out;
}

NumericSeries NumericSeries::from_exact(const OperatorSeries& s, const UnitValues& u) {
  NumericSeries out;
  out.coeffs.reserve(s.order() + 1);
  for (std::size_t m = 0; m <= s.order(); ++m)
    out.coeffs.push_back(NumericPoly::from_exact(s.at(m), u));
  return out;
}

NumericSeries NumericSeries::dagger() const {
  NumericSeries out;
  out.coeffs.reserve(coeffs.size());
  for (const auto& p : coeffs) out.coeffs.push_back(p.dagger());
  return out;
}

NumericSeries series_product(const NumericSeries& x, const NumericSeries& y) {
  const std::size_t M = std::max(x.order(), y.order());
  NumericSeries out;
  out.coeffs.assign(M + 1, NumericPoly{});
  for (std::size_t i = 0; i <= x.order(); ++i)
    for (std::size_t j = 0; j <= y.order() && i + j <= M; ++j)
      out.coeffs[i + j] += normal_order_product(x.at(i), y.at(j));
  return out;
}

NumericSeries series_commutator(const NumericSeries& x, const NumericSeries& y) {
  NumericSeries xy = series_product(x, y);
  NumericSeries yx = series_product(y, x);
  for (std::size_t m = 0; m < xy.coeffs.size(); ++m) xy.coeffs[m] -= yx.coeffs[m];
  return xy;
}

NumericSeries squeezed_annihilator(const OperatorSeries& alphas, const SqueezeParams& params,
                                   const UnitValues& u) {
  NumericSeries tilde_a = NumericSeries::from_exact(alphas, u);
  NumericSeries tilde_ad = tilde_a.dagger();
  const double ch = std::cosh(params.r);
  const double sh = std::sinh(params.r);
  const std::complex<double> phase{std::cos(params.theta), std::sin(params.theta)};

  NumericSeries out;
  out.coeffs.reserve(tilde_a.coeffs.size());
  for (std::size_t m = 0; m < tilde_a.coeffs.size(); ++m) {
    NumericPoly p = tilde_a.at(m) * std::complex<double>{ch, 0.0};
    p -= tilde_ad.at(m) * (phase * sh);
    out.coeffs.push_back(std::move(p));
  }
  return out;
}

std::vector<std::complex<double>> coherent_state_coeffs(std::size_t n_max,
                                                        std::complex<double> alpha) {
  std::vector<std::complex<double>> out(n_max + 1);
  const double weight = std::exp(-0.5 * std::norm(alpha));
  std::complex<double> term{weight, 0.0};  // alpha^n / sqrt(n!) accumulated
  out[0] = term;
  for (std::size_t n = 1; n <= n_max; ++n) {
    term *= alpha / std::sqrt(static_cast<double>(n));
    out[n] = term;
  }
  return out;
}

}  // namespace ladderkit
