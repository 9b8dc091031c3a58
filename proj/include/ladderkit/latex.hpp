#ifndef LADDERKIT_LATEX_HPP
#define LADDERKIT_LATEX_HPP

#include <string>

#include "ladderkit/pt_engine.hpp"

namespace ladderkit {

std::string latex_scalar(const Scalar& s);
std::string latex_scalar_sum(const ScalarSum& s);
std::string latex_operator_poly(const OperatorPoly& p);
std::string latex_diagonal_poly(const DiagonalPoly& p);
std::string latex_series(const OperatorSeries& s, const std::string& symbol);

/// Wraps display-math lines into a compilable standalone document.
std::string latex_document(const std::vector<std::string>& display_lines);

}  // namespace ladderkit

#endif
