#include "ladderkit/pt_engine.hpp"

#include <stdexcept>

namespace ladderkit {

Scalar inv_hbar_omega() {
  return Scalar::units_scalar(Rational(1), UnitMonomial{-2, 0, -2});
}

void require_hermitian_perturbation(const OperatorPoly& V) {
  if (!is_hermitian(V)) {
    throw std::invalid_argument("perturbation is not Hermitian");
  }
}

StateCorrectionOps state_corrections(const OperatorPoly& V, std::size_t M) {
  require_hermitian_perturbation(V);
  const ScalarSum resolvent{inv_hbar_omega()};

  StateCorrectionOps out;
  out.omegas.reserve(M + 1);
  out.omegas.push_back(OperatorPoly::identity());

  std::vector<OperatorPoly> diag_energy;  // E_l = check(V Omega_{l-1}), 1-based
  diag_energy.push_back(OperatorPoly::zero());

  for (std::size_t m = 1; m <= M; ++m) {
    OperatorPoly rhs = normal_order_product(V, out.omegas[m - 1]);
    diag_energy.push_back(check(rhs));
    for (std::size_t l = 1; l < m; ++l) {
      // E_l is a level-diagonal operator and attaches to the level being
      // corrected, hence it sits to the right of Omega_{m-l}.
      rhs -= normal_order_product(out.omegas[m - l], diag_energy[l]);
    }
    out.omegas.push_back(bar(rhs) * resolvent);
  }
  return out;
}

EnergySeries energy_corrections(const OperatorPoly& V, std::size_t M) {
  StateCorrectionOps omegas = state_corrections(V, M);
  EnergySeries out;
  out.eps.reserve(M + 1);

  // eps_0(n) = hbar omega (n + 1/2)
  Scalar hw = Scalar::units_scalar(Rational(1), UnitMonomial{2, 0, 2});
  DiagonalPoly e0;
  e0.set_coeff(1, ScalarSum(hw));
  e0.set_coeff(0, ScalarSum(hw * Rational(1, 2)));
  out.eps.push_back(std::move(e0));

  for (std::size_t m = 1; m <= M; ++m) {
    out.eps.push_back(diagonal_as_npoly(check(normal_order_product(V, omegas.at(m - 1)))));
  }
  return out;
}

OperatorSeries operator_corrections(const OperatorPoly& V, std::size_t M,
                                    const OperatorPoly& seed) {
  StateCorrectionOps omegas = state_corrections(V, M);

  OperatorSeries out(M, seed);
  for (std::size_t m = 1; m <= M; ++m) {
    OperatorPoly x_m = commutator(omegas.at(m), seed);
    for (std::size_t l = 1; l < m; ++l) {
      x_m -= normal_order_product(out.at(l), omegas.at(m - l));
    }
    out.at(m) = std::move(x_m);
  }
  return out;
}

OperatorSeries alpha_corrections(const OperatorPoly& V, std::size_t M) {
  return operator_corrections(V, M, OperatorPoly::annihilator());
}

OperatorSeries raising_corrections(const OperatorPoly& V, std::size_t M) {
  return operator_corrections(V, M, OperatorPoly::creator());
}

OperatorSeries number_corrections_direct(const OperatorPoly& V, std::size_t M) {
  return operator_corrections(V, M, OperatorPoly::number());
}

OperatorSeries creation_corrections(const OperatorSeries& alphas) {
  return series_dagger(alphas);
}

OperatorSeries number_corrections(const OperatorSeries& alphas) {
  return series_product(series_dagger(alphas), alphas);
}

OperatorPoly alpha2_closed_form(const OperatorPoly& V) {
  require_hermitian_perturbation(V);
  const OperatorPoly a = OperatorPoly::annihilator();
  const OperatorPoly vbar = bar(V);

  OperatorPoly t1 = commutator(bar(normal_order_product(V, vbar)), a);
  OperatorPoly t2 = commutator(normal_order_product(bar(vbar), check(V)), a);
  OperatorPoly t3 = normal_order_product(commutator(vbar, a), vbar);

  Scalar w = inv_hbar_omega();
  return (t1 - t2 - t3) * ScalarSum(w * w);
}

ExpectationReport expectation(const OperatorPoly& V, const OperatorPoly& O, std::size_t M) {
  StateCorrectionOps omegas = state_corrections(V, M);

  ExpectationReport out;
  out.value.assign(M + 1, DiagonalPoly::zero());
  out.norm.assign(M + 1, DiagonalPoly::zero());
  const OperatorPoly id = OperatorPoly::identity();

  for (std::size_t lp = 0; lp <= M; ++lp) {
    OperatorPoly bra = dagger(omegas.at(lp));
    for (std::size_t l = 0; l + lp <= M; ++l) {
      OperatorPoly mid = normal_order_product(bra, normal_order_product(O, omegas.at(l)));
      out.value[lp + l] += diagonal_as_npoly(check(mid));
      OperatorPoly ovl = normal_order_product(bra, omegas.at(l));
      out.norm[lp + l] += diagonal_as_npoly(check(ovl));
    }
  }

  // Formal series ratio value * norm^{-1}; norm starts at 1.
  std::vector<DiagonalPoly> inv(M + 1);
  inv[0] = DiagonalPoly::one();
  for (std::size_t m = 1; m <= M; ++m) {
    DiagonalPoly acc;
    for (std::size_t l = 1; l <= m; ++l) acc += out.norm[l] * inv[m - l];
    inv[m] = -acc;
  }
  out.normalized.assign(M + 1, DiagonalPoly::zero());
  for (std::size_t i = 0; i <= M; ++i)
    for (std::size_t j = 0; i + j <= M; ++j) out.normalized[i + j] += out.value[i] * inv[j];

  return out;
}

OperatorSeries rewrite_in_tilde(const OperatorPoly& O, const OperatorSeries& alphas) {
  OperatorSeries a_in_tilde = invert_series(alphas);
  return series_substitute(O, a_in_tilde, series_dagger(a_in_tilde));
}

}  // namespace ladderkit
