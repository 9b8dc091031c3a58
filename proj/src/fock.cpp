#include "ladderkit/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ladderkit {

FockMatrix FockMatrix::identity(std::size_t dim) {
  FockMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

FockMatrix FockMatrix::adjoint() const {
  FockMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double FockMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& z : data_) acc += std::norm(z);
  return std::sqrt(acc);
}

double FockMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

FockMatrix& FockMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  const std::size_t n = a.dim();
  FockMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto ark = a(r, k);
      if (ark == FockMatrix::Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

std::vector<FockMatrix::Complex> FockMatrix::apply(const std::vector<Complex>& v) const {
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double vector_norm(const FockVector& v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

std::complex<double> inner(const FockVector& a, const FockVector& b) {
  std::complex<double> acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

FockMatrix to_matrix(const OperatorPoly& x, std::size_t D, const UnitValues& u) {
  if (D == 0) throw std::invalid_argument("to_matrix: cutoff must be positive");
  FockMatrix out(D);
  for (const auto& [key, c] : x.terms()) {
    const auto cval = c.eval(u);
    for (std::size_t n = static_cast<std::size_t>(key.ann); n < D; ++n) {
      const long row = static_cast<long>(n) - key.ann + key.dag;
      if (row < 0 || row >= static_cast<long>(D)) continue;
      // sqrt(n falling^k * (n-k+1) rising^j)
      double prod = 1.0;
      for (int t = 0; t < key.ann; ++t) prod *= static_cast<double>(n - t);
      for (int t = 1; t <= key.dag; ++t) prod *= static_cast<double>(n - key.ann + t);
      out(static_cast<std::size_t>(row), n) += cval * std::sqrt(prod);
    }
  }
  return out;
}

FockVector PerturbedLevel::state_at(double lambda, std::size_t M) const {
  FockVector out(states.front().size());
  double lp = 1.0;
  for (std::size_t m = 0; m <= M && m < states.size(); ++m) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += lp * states[m][i];
    lp *= lambda;
  }
  return out;
}

double PerturbedLevel::energy_at(double lambda, std::size_t M) const {
  double acc = 0.0;
  double lp = 1.0;
  for (std::size_t m = 0; m <= M && m < energy.size(); ++m) {
    acc += lp * energy[m];
    lp *= lambda;
  }
  return acc;
}

PerturbedLevel rs_sums(const FockMatrix& V, const UnitValues& u, std::size_t M, std::size_t n,
                       int degree) {
  const std::size_t D = V.dim();
  if (n + M * static_cast<std::size_t>(std::max(degree, 0)) + 4 > D) {
    throw std::invalid_argument("rs_sums: cutoff safety margin violated");
  }

  const double hw = u.hbar * u.omega;
  PerturbedLevel out;
  out.n = n;
  out.energy.push_back(hw * (static_cast<double>(n) + 0.5));
  FockVector e_n(D);
  e_n[n] = 1.0;
  out.states.push_back(e_n);

  for (std::size_t m = 1; m <= M; ++m) {
    FockVector rhs = V.apply(out.states[m - 1]);
    out.energy.push_back(inner(e_n, rhs).real());
    for (std::size_t l = 1; l < m; ++l) {
      const double eps_l = out.energy[l];
      for (std::size_t i = 0; i < D; ++i) rhs[i] -= eps_l * out.states[m - l][i];
    }
    // Resolvent with denominators E_n - E_j = hbar omega (n - j); the
    // j = n component is projected out (intermediate normalization).
    FockVector eta(D);
    for (std::size_t j = 0; j < D; ++j) {
      if (j == n) continue;
      eta[j] = rhs[j] / (hw * (static_cast<double>(n) - static_cast<double>(j)));
    }
    out.states.push_back(std::move(eta));
  }
  return out;
}

EigenResult eig_hermitian(const FockMatrix& Hm) {
  const std::size_t n = Hm.dim();
  const double scale = std::max(1.0, Hm.frobenius_norm());
  if (Hm.hermiticity_defect() > 1e-12 * scale) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  }

  FockMatrix A = Hm;
  FockMatrix V = FockMatrix::identity(n);
  using C = FockMatrix::Complex;

  auto offdiag = [&]() {
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) acc += std::norm(A(p, q));
    return std::sqrt(2.0 * acc);
  };

  const double tol = 1e-13 * scale;
  for (int sweep = 0; sweep < 100 && offdiag() > tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double h = std::abs(A(p, q));
        if (h <= tol / n) continue;
        const C phase = A(p, q) / h;
        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        const double tau = (aqq - app) / (2.0 * h);
        const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const C su = s * phase;
        const C suc = s * std::conj(phase);
        // Columns: A <- A U with U(p,p)=c, U(p,q)=-su, U(q,p)=suc, U(q,q)=c.
        for (std::size_t r = 0; r < n; ++r) {
          const C arp = A(r, p), arq = A(r, q);
          A(r, p) = c * arp + suc * arq;
          A(r, q) = -su * arp + c * arq;
          const C vrp = V(r, p), vrq = V(r, q);
          V(r, p) = c * vrp + suc * vrq;
          V(r, q) = -su * vrp + c * vrq;
        }
        // Rows: A <- U^dagger A.
        for (std::size_t cc = 0; cc < n; ++cc) {
          const C apc = A(p, cc), aqc = A(q, cc);
          A(p, cc) = c * apc + su * aqc;
          A(q, cc) = -suc * apc + c * aqc;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return A(i, i).real() < A(j, j).real(); });

  EigenResult out;
  out.values.resize(n);
  out.vectors = FockMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = A(idx[k], idx[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = V(r, idx[k]);
  }
  return out;
}

AlphaVerification verify_alpha(const OperatorSeries& alphas, const OperatorPoly& V,
                               std::size_t D, std::size_t M, const std::vector<double>& lambdas,
                               const std::vector<std::size_t>& levels, const UnitValues& u) {
  const int deg = V.degree();
  FockMatrix Vm = to_matrix(V, D, u);

  std::vector<FockMatrix> alpha_mats;
  for (std::size_t m = 0; m <= M; ++m) alpha_mats.push_back(to_matrix(alphas.at(m), D, u));

  AlphaVerification out;
  out.min_slope = 1e9;
  bool any_slope = false;

  for (std::size_t n : levels) {
    if (n == 0) continue;
    PerturbedLevel lvl_n = rs_sums(Vm, u, M, n, deg);
    PerturbedLevel lvl_prev = rs_sums(Vm, u, M, n - 1, deg);

    std::vector<double> logs_l, logs_r;
    for (double lambda : lambdas) {
      FockMatrix tilde_a(D);
      double lp = 1.0;
      for (std::size_t m = 0; m <= M; ++m) {
        tilde_a += alpha_mats[m] * FockMatrix::Complex{lp, 0.0};
        lp *= lambda;
      }
      FockVector sn = lvl_n.state_at(lambda, M);
      FockVector sp = lvl_prev.state_at(lambda, M);
      FockVector lowered = tilde_a.apply(sn);
      const double rootn = std::sqrt(static_cast<double>(n));
      for (std::size_t i = 0; i < D; ++i) lowered[i] -= rootn * sp[i];

      AlphaCheck chk;
      chk.level = n;
      chk.lambda = lambda;
      chk.residual = vector_norm(lowered);
      chk.state_norm = vector_norm(sn);
      out.checks.push_back(chk);

      if (chk.residual > 1e-14) {
        logs_l.push_back(std::log(lambda));
        logs_r.push_back(std::log(chk.residual));
      }
    }

    if (logs_l.size() >= 2) {
      const double N = static_cast<double>(logs_l.size());
      const double sx = std::accumulate(logs_l.begin(), logs_l.end(), 0.0);
      const double sy = std::accumulate(logs_r.begin(), logs_r.end(), 0.0);
      double sxy = 0.0, sxx = 0.0;
      for (std::size_t i = 0; i < logs_l.size(); ++i) {
        sxy += logs_l[i] * logs_r[i];
        sxx += logs_l[i] * logs_l[i];
      }
      const double slope = (N * sxy - sx * sy) / (N * sxx - sx * sx);
      out.slopes.emplace_back(n, slope);
      out.min_slope = std::min(out.min_slope, slope);
      any_slope = true;
    }
  }

  if (!any_slope) out.min_slope = 1e9;  // residuals at float zero everywhere
  out.pass = out.min_slope >= static_cast<double>(M) + 0.9;
  return out;
}

}  // namespace ladderkit
