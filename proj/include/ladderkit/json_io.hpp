#ifndef LADDERKIT_JSON_IO_HPP
#define LADDERKIT_JSON_IO_HPP

#include <json.hpp>

#include "ladderkit/fock.hpp"
#include "ladderkit/pt_engine.hpp"

namespace ladderkit {

using Json = nlohmann::ordered_json;

// Rationals serialize as [numerator, denominator]; components that fit in
// 64 bits are JSON integers, larger ones decimal strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json scalar_sum_to_json(const ScalarSum& s);
ScalarSum scalar_sum_from_json(const Json& j);

// {"terms":[{"dag":j,"ann":k,"coeff":[Scalar,...]},...]}, (j,k) ascending.
Json operator_poly_to_json(const OperatorPoly& p);
OperatorPoly operator_poly_from_json(const Json& j);

// {"coeffs":[[Scalar,...],...]}, index = power of n.
Json diagonal_poly_to_json(const DiagonalPoly& p);
DiagonalPoly diagonal_poly_from_json(const Json& j);

Json series_to_json(const OperatorSeries& s);
OperatorSeries series_from_json(const Json& j);

/// Full correction report for one perturbation.
Json correction_report(const OperatorPoly& V, std::size_t order, const OperatorSeries& alphas,
                       const EnergySeries& eps, const StateCorrectionOps& omegas,
                       const ExpectationReport* expectations = nullptr);

Json alpha_verification_to_json(const AlphaVerification& v);

}  // namespace ladderkit

#endif
