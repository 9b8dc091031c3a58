#ifndef LADDERKIT_SERIES_HPP
#define LADDERKIT_SERIES_HPP

#include <vector>

#include "ladderkit/operator_poly.hpp"

namespace ladderkit {

/// Lambda-graded operator polynomial, truncated hard at a fixed order:
/// coeffs[m] is the lambda^m coefficient. All arithmetic is "up to order M".
class OperatorSeries {
 public:
  OperatorSeries() = default;
  explicit OperatorSeries(std::size_t order) : coeffs_(order + 1) {}
  OperatorSeries(std::size_t order, OperatorPoly zeroth) : coeffs_(order + 1) {
    coeffs_[0] = std::move(zeroth);
  }

  static OperatorSeries constant(std::size_t order, OperatorPoly p) {
    return OperatorSeries(order, std::move(p));
  }

  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const OperatorPoly& at(std::size_t m) const { return coeffs_.at(m); }
  OperatorPoly& at(std::size_t m) { return coeffs_.at(m); }
  const std::vector<OperatorPoly>& coeffs() const { return coeffs_; }

  /// Re-truncate (extend with zeros or drop high orders).
  OperatorSeries truncated(std::size_t order) const;

  OperatorSeries operator-() const;
  OperatorSeries& operator+=(const OperatorSeries& o);
  OperatorSeries& operator-=(const OperatorSeries& o);
  friend OperatorSeries operator+(OperatorSeries a, const OperatorSeries& b) { return a += b; }
  friend OperatorSeries operator-(OperatorSeries a, const OperatorSeries& b) { return a -= b; }
  friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<OperatorPoly> coeffs_;
};

/// Normal-ordered series product, truncated at the common order.
OperatorSeries series_product(const OperatorSeries& x, const OperatorSeries& y);

OperatorSeries series_commutator(const OperatorSeries& x, const OperatorSeries& y);

/// Term-wise Hermitian conjugate.
OperatorSeries series_dagger(const OperatorSeries& x);

/// Substitute series for the generators: every term ad^j a^k of p becomes
/// dag_series^j * ann_series^k (series products, truncated). Used for
/// rewriting operators in the corrected ladder algebra.
OperatorSeries series_substitute(const OperatorPoly& p, const OperatorSeries& ann_series,
                                 const OperatorSeries& dag_series);

/// Invert s = a + O(lambda): returns t with s(t, t^dagger) = a up to order M.
/// Rejects series whose zeroth-order coefficient is not a.
OperatorSeries invert_series(const OperatorSeries& s);

}  // namespace ladderkit

#endif
