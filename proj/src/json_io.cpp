#include "ladderkit/json_io.hpp"

namespace ladderkit {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(std::to_string(j.get<std::int64_t>()));
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

Rational rational_from_json(const Json& j) {
  Rational r(integer_from_json(j.at(0)), integer_from_json(j.at(1)));
  r.canonicalize();
  return r;
}

Json scalar_to_json(const Scalar& s) {
  return Json{{"re", rational_to_json(s.re)},
              {"re_s2", rational_to_json(s.re_s2)},
              {"im", rational_to_json(s.im)},
              {"im_s2", rational_to_json(s.im_s2)},
              {"units",
               Json{{"hbar2", s.units.hbar2}, {"m2", s.units.mass2}, {"w2", s.units.omega2}}}};
}

Scalar scalar_from_json(const Json& j) {
  const auto& u = j.at("units");
  return Scalar{rational_from_json(j.at("re")), rational_from_json(j.at("re_s2")),
                rational_from_json(j.at("im")), rational_from_json(j.at("im_s2")),
                UnitMonomial{u.at("hbar2").get<std::int64_t>(), u.at("m2").get<std::int64_t>(),
                             u.at("w2").get<std::int64_t>()}};
}

Json scalar_sum_to_json(const ScalarSum& s) {
  Json out = Json::array();
  for (const auto& p : s.parts()) out.push_back(scalar_to_json(p));
  return out;
}

ScalarSum scalar_sum_from_json(const Json& j) {
  ScalarSum out;
  for (const auto& e : j) out += scalar_from_json(e);
  return out;
}

Json operator_poly_to_json(const OperatorPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back(Json{{"dag", key.dag}, {"ann", key.ann}, {"coeff", scalar_sum_to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

OperatorPoly operator_poly_from_json(const Json& j) {
  OperatorPoly out;
  for (const auto& t : j.at("terms")) {
    out.add_term(t.at("dag").get<int>(), t.at("ann").get<int>(),
                 scalar_sum_from_json(t.at("coeff")));
  }
  return out;
}

Json diagonal_poly_to_json(const DiagonalPoly& p) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k <= p.degree(); ++k) coeffs.push_back(scalar_sum_to_json(p.coeff(k)));
  if (p.is_zero()) coeffs = Json::array();
  return Json{{"coeffs", std::move(coeffs)}};
}

DiagonalPoly diagonal_poly_from_json(const Json& j) {
  DiagonalPoly out;
  std::size_t k = 0;
  for (const auto& c : j.at("coeffs")) out.set_coeff(k++, scalar_sum_from_json(c));
  return out;
}

Json series_to_json(const OperatorSeries& s) {
  Json out = Json::array();
  for (std::size_t m = 0; m <= s.order(); ++m) out.push_back(operator_poly_to_json(s.at(m)));
  return out;
}

OperatorSeries series_from_json(const Json& j) {
  OperatorSeries out(j.empty() ? 0 : j.size() - 1);
  std::size_t m = 0;
  for (const auto& e : j) out.at(m++) = operator_poly_from_json(e);
  return out;
}

Json correction_report(const OperatorPoly& V, std::size_t order, const OperatorSeries& alphas,
                       const EnergySeries& eps, const StateCorrectionOps& omegas,
                       const ExpectationReport* expectations) {
  Json out{{"V", operator_poly_to_json(V)}, {"order", order}};
  out["alphas"] = series_to_json(alphas);
  Json eps_json = Json::array();
  for (const auto& e : eps.eps) eps_json.push_back(diagonal_poly_to_json(e));
  out["epsilons"] = std::move(eps_json);
  Json omegas_json = Json::array();
  for (const auto& o : omegas.omegas) omegas_json.push_back(operator_poly_to_json(o));
  out["omegas"] = std::move(omegas_json);
  if (expectations != nullptr) {
    auto dump = [](const std::vector<DiagonalPoly>& v) {
      Json arr = Json::array();
      for (const auto& d : v) arr.push_back(diagonal_poly_to_json(d));
      return arr;
    };
    out["norms"] = dump(expectations->norm);
    out["expectations"] = Json{{"value", dump(expectations->value)},
                               {"normalized", dump(expectations->normalized)}};
  }
  return out;
}

Json alpha_verification_to_json(const AlphaVerification& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back(Json{{"name", "ladder_residual"},
                          {"lambda", c.lambda},
                          {"level", c.level},
                          {"residual", c.residual},
                          {"pass", v.pass}});
  }
  Json slopes = Json::array();
  for (const auto& [level, slope] : v.slopes)
    slopes.push_back(Json{{"level", level}, {"slope", slope}});
  return Json{{"checks", std::move(checks)},
              {"slopes", std::move(slopes)},
              {"min_slope", v.min_slope},
              {"pass", v.pass}};
}

}  // namespace ladderkit
