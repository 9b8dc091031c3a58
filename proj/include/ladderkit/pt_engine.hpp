#ifndef LADDERKIT_PT_ENGINE_HPP
#define LADDERKIT_PT_ENGINE_HPP

#include <vector>

#include "ladderkit/series.hpp"

namespace ladderkit {

/// Operator packaging of the eigenstate corrections: the perturbed level
/// |n> up to order M is  sum_m lambda^m Omega_m |n(0)>,  Omega_0 = 1.
/// Valid for the oscillator because the resolvent denominators are
/// hbar omega (n - j), which act term-wise as the bar transform.
struct StateCorrectionOps {
  std::vector<OperatorPoly> omegas;

  std::size_t order() const { return omegas.empty() ? 0 : omegas.size() - 1; }
  const OperatorPoly& at(std::size_t m) const { return omegas.at(m); }
};

/// Energy corrections as polynomials in the level index:
/// eps[m](n) is the lambda^m correction to E_n; eps[0](n) = hbar omega (n + 1/2).
struct EnergySeries {
  std::vector<DiagonalPoly> eps;

  std::size_t order() const { return eps.empty() ? 0 : eps.size() - 1; }
  const DiagonalPoly& at(std::size_t m) const { return eps.at(m); }
};

/// Unnormalized expectation and norm of the perturbed levels as
/// lambda-series of level polynomials, plus their ratio.
struct ExpectationReport {
  std::vector<DiagonalPoly> value;       // <n(M)| O |n(M)> per lambda order
  std::vector<DiagonalPoly> norm;        // <n(M)|n(M)> per lambda order
  std::vector<DiagonalPoly> normalized;  // value / norm as a truncated series
};

/// 1/(hbar omega) as an exact scalar.
Scalar inv_hbar_omega();

/// Throws std::invalid_argument when V is not exactly Hermitian.
void require_hermitian_perturbation(const OperatorPoly& V);

/// Omega_m recursion. Omega_1 = bar(V)/hbar omega; for m >= 2
///   Omega_m = bar(V Omega_{m-1} - sum_{l=1}^{m-1} Omega_{m-l} E_l) / hbar omega
/// with E_l = check(V Omega_{l-1}) kept to the right of Omega_{m-l}.
StateCorrectionOps state_corrections(const OperatorPoly& V, std::size_t M);

EnergySeries energy_corrections(const OperatorPoly& V, std::size_t M);

/// Generic conjugation recursion: the series X~ acting on the corrected
/// levels the way `seed` acts on the unperturbed ones,
///   X_0 = seed,  X_m = [Omega_m, seed] - sum_{l=1}^{m-1} X_l Omega_{m-l}.
OperatorSeries operator_corrections(const OperatorPoly& V, std::size_t M,
                                    const OperatorPoly& seed);

/// Corrections to the annihilation operator (seed a).
OperatorSeries alpha_corrections(const OperatorPoly& V, std::size_t M);

/// The genuine raising series (seed ad). With intermediate normalization the
/// corrected levels are not unit norm, so from second order on this differs
/// from the term-wise dagger of the alpha series; it is the series for which
/// [a~, a~dagger] = 1 holds order by order.
OperatorSeries raising_corrections(const OperatorPoly& V, std::size_t M);

/// Number-operator series from the same recursion (seed N); equals the
/// product raising * alpha order by order.
OperatorSeries number_corrections_direct(const OperatorPoly& V, std::size_t M);

/// Term-wise dagger of the alpha series (the closed-form convention used by
/// the second-order displays and the nu_2 product).
OperatorSeries creation_corrections(const OperatorSeries& alphas);

/// Corrected number operator N~ = a~dagger a~, truncated at the alpha order.
OperatorSeries number_corrections(const OperatorSeries& alphas);

/// Direct evaluation of the closed second-order form
///   alpha_2 = { [bar(V bar V), a] - [barbar(V) check(V), a] - [bar V, a] bar V } / (hbar omega)^2
/// kept as an independent route for cross-checking the recursion.
OperatorPoly alpha2_closed_form(const OperatorPoly& V);

ExpectationReport expectation(const OperatorPoly& V, const OperatorPoly& O, std::size_t M);

/// O rewritten as a lambda-series in the corrected ladder operators, by
/// substituting the inverted alpha series for a and its dagger for ad.
OperatorSeries rewrite_in_tilde(const OperatorPoly& O, const OperatorSeries& alphas);

}  // namespace ladderkit

#endif
