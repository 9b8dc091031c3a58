#include "ladderkit/series.hpp"

#include <stdexcept>

namespace ladderkit {

OperatorSeries OperatorSeries::truncated(std::size_t order) const {
  OperatorSeries out(order);
  for (std::size_t m = 0; m <= order && m < coeffs_.size(); ++m) out.coeffs_[m] = coeffs_[m];
  return out;
}

OperatorSeries OperatorSeries::operator-() const {
  OperatorSeries out(order());
  for (std::size_t m = 0; m < coeffs_.size(); ++m) out.coeffs_[m] = -coeffs_[m];
  return out;
}

OperatorSeries& OperatorSeries::operator+=(const OperatorSeries& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

OperatorSeries& OperatorSeries::operator-=(const OperatorSeries& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

OperatorSeries series_product(const OperatorSeries& x, const OperatorSeries& y) {
  const std::size_t M = std::max(x.order(), y.order());
  OperatorSeries out(M);
  for (std::size_t i = 0; i <= x.order(); ++i) {
    if (x.at(i).is_zero()) continue;
    for (std::size_t j = 0; j <= y.order() && i + j <= M; ++j) {
      if (y.at(j).is_zero()) continue;
      out.at(i + j) += normal_order_product(x.at(i), y.at(j));
    }
  }
  return out;
}

OperatorSeries series_commutator(const OperatorSeries& x, const OperatorSeries& y) {
  return series_product(x, y) - series_product(y, x);
}

OperatorSeries series_dagger(const OperatorSeries& x) {
  OperatorSeries out(x.order());
  for (std::size_t m = 0; m <= x.order(); ++m) out.at(m) = dagger(x.at(m));
  return out;
}

OperatorSeries series_substitute(const OperatorPoly& p, const OperatorSeries& ann_series,
                                 const OperatorSeries& dag_series) {
  const std::size_t M = std::max(ann_series.order(), dag_series.order());
  OperatorSeries out(M);
  for (const auto& [key, c] : p.terms()) {
    OperatorSeries term = OperatorSeries::constant(M, OperatorPoly::identity());
    for (int t = 0; t < key.dag; ++t) term = series_product(term, dag_series);
    for (int t = 0; t < key.ann; ++t) term = series_product(term, ann_series);
    for (std::size_t m = 0; m <= M; ++m) out.at(m) += term.at(m) * c;
  }
  return out;
}

OperatorSeries invert_series(const OperatorSeries& s) {
  if (s.at(0) != OperatorPoly::annihilator()) {
    throw std::invalid_argument("invert_series: zeroth-order coefficient must be a");
  }
  const std::size_t M = s.order();
  // Fixed point of  t = a~ - sum_{m>=1} lambda^m alpha_m(t, t^dagger),
  // where the generators of t now stand for the corrected operators.
  // Each pass fixes one more lambda order.
  OperatorSeries t = OperatorSeries::constant(M, OperatorPoly::annihilator());
  for (std::size_t pass = 0; pass < M; ++pass) {
    OperatorSeries td = series_dagger(t);
    OperatorSeries next = OperatorSeries::constant(M, OperatorPoly::annihilator());
    for (std::size_t m = 1; m <= M; ++m) {
      if (s.at(m).is_zero()) continue;
      OperatorSeries sub = series_substitute(s.at(m), t, td).truncated(M - m);
      for (std::size_t l = 0; l + m <= M; ++l) next.at(l + m) -= sub.at(l);
    }
    t = next;
  }
  return t;
}

}  // namespace ladderkit
