#ifndef LADDERKIT_FOCK_HPP
#define LADDERKIT_FOCK_HPP

#include <complex>
#include <string>
#include <vector>

#include "ladderkit/series.hpp"

namespace ladderkit {

/// Dense complex matrix over the truncated Fock basis |0>..|D-1>.
class FockMatrix {
 public:
  using Complex = std::complex<double>;

  FockMatrix() = default;
  explicit FockMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static FockMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  FockMatrix adjoint() const;
  double frobenius_norm() const;
  double hermiticity_defect() const;  // max |A - A^dagger| entry

  FockMatrix& operator+=(const FockMatrix& o);
  FockMatrix& operator-=(const FockMatrix& o);
  FockMatrix& operator*=(Complex s);
  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
  friend FockMatrix operator*(FockMatrix a, Complex s) { return a *= s; }
  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);

  std::vector<Complex> apply(const std::vector<Complex>& v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

using FockVector = std::vector<std::complex<double>>;

double vector_norm(const FockVector& v);
std::complex<double> inner(const FockVector& a, const FockVector& b);

/// Matrix of a canonical operator polynomial at cutoff D. Rejects D = 0.
FockMatrix to_matrix(const OperatorPoly& x, std::size_t D, const UnitValues& u = {});

/// Perturbed level data from the literal Rayleigh-Schrodinger sums:
/// energy corrections and state-correction vectors for a single level,
/// independent of the bar-transform shortcut.
struct PerturbedLevel {
  std::size_t n = 0;
  std::vector<double> energy;       // energy[m] = eps_{n,(m)}, energy[0] = E_n^(0)
  std::vector<FockVector> states;   // states[m] = eta_{n,(m)}, states[0] = e_n

  /// Intermediate-normalized partial sum  sum_m lambda^m eta_m.
  FockVector state_at(double lambda, std::size_t M) const;
  double energy_at(double lambda, std::size_t M) const;
};

/// Literal evaluation of the recursive RS sums at cutoff D. The level must
/// satisfy the truncation-safety margin n + M*deg <= D - 4.
PerturbedLevel rs_sums(const FockMatrix& V, const UnitValues& u, std::size_t M, std::size_t n,
                       int degree);

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Eigenvalues ascending; columns of `vectors` are the eigenvectors.
struct EigenResult {
  std::vector<double> values;
  FockMatrix vectors;
};
EigenResult eig_hermitian(const FockMatrix& Hm);

/// One ladder-residual check: || a~(M) |n(M)> - sqrt(n) |(n-1)(M)> ||.
struct AlphaCheck {
  std::size_t level = 0;
  double lambda = 0.0;
  double residual = 0.0;
  double state_norm = 0.0;
};

struct AlphaVerification {
  std::vector<AlphaCheck> checks;
  /// Per-level least-squares log-log slope of residual vs lambda.
  std::vector<std::pair<std::size_t, double>> slopes;
  double min_slope = 0.0;
  bool pass = false;
};

/// Builds perturbed states from rs_sums and verifies that the corrected
/// annihilation series lowers them, with residuals scaling as
/// O(lambda^(M+1)) (slope threshold M + 0.9).
AlphaVerification verify_alpha(const OperatorSeries& alphas, const OperatorPoly& V,
                               std::size_t D, std::size_t M, const std::vector<double>& lambdas,
                               const std::vector<std::size_t>& levels, const UnitValues& u = {});

}  // namespace ladderkit

#endif
