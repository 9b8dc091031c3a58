#ifndef LADDERKIT_SQUEEZE_HPP
#define LADDERKIT_SQUEEZE_HPP

#include <complex>
#include <map>
#include <vector>

#include "ladderkit/series.hpp"

namespace ladderkit {

/// Float-coefficient counterpart of OperatorPoly, used only where
/// transcendental prefactors (cosh r, e^{i theta}) leave the exact ring.
class NumericPoly {
 public:
  using Complex = std::complex<double>;
  using TermMap = std::map<TermKey, Complex>;

  NumericPoly() = default;

  static NumericPoly from_exact(const OperatorPoly& p, const UnitValues& u = {});

  const TermMap& terms() const { return terms_; }
  void add_term(int dag, int ann, Complex c);
  Complex coeff(int dag, int ann) const;
  double max_abs_coeff() const;

  NumericPoly dagger() const;
  NumericPoly& operator+=(const NumericPoly& o);
  NumericPoly& operator-=(const NumericPoly& o);
  friend NumericPoly operator*(const NumericPoly& a, Complex s);

 private:
  TermMap terms_;  // entries below 1e-15 in magnitude are dropped
};

NumericPoly normal_order_product(const NumericPoly& x, const NumericPoly& y);

/// Lambda-graded numeric operator series.
struct NumericSeries {
  std::vector<NumericPoly> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const NumericPoly& at(std::size_t m) const { return coeffs.at(m); }

  static NumericSeries from_exact(const OperatorSeries& s, const UnitValues& u = {});
  NumericSeries dagger() const;
};

NumericSeries series_product(const NumericSeries& x, const NumericSeries& y);
NumericSeries series_commutator(const NumericSeries& x, const NumericSeries& y);

struct SqueezeParams {
  double r = 0.0;      // squeeze magnitude, >= 0
  double theta = 0.0;  // squeeze phase in [0, 2 pi)
};

/// a~_z = a~ cosh r - e^{i theta} a~dagger sinh r, order by order.
NumericSeries squeezed_annihilator(const OperatorSeries& alphas, const SqueezeParams& params,
                                   const UnitValues& u = {});

/// Coherent-state amplitudes over the perturbed levels:
/// e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n = 0..n_max.
std::vector<std::complex<double>> coherent_state_coeffs(std::size_t n_max,
                                                        std::complex<double> alpha);

}  // namespace ladderkit

#endif
