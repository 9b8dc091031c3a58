#include "ladderkit/latex.hpp"

#include <sstream>

namespace ladderkit {

namespace {

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string num = r.get_num().get_str();
  bool neg = false;
  if (!num.empty() && num[0] == '-') {
    neg = true;
    num = num.substr(1);
  }
  return (neg ? std::string("-") : std::string()) + "\\frac{" + num + "}{" +
         r.get_den().get_str() + "}";
}

void append_unit(std::ostringstream& os, const char* sym, std::int64_t e2) {
  if (e2 == 0) return;
  os << " " << sym;
  if (e2 == 2) return;
  os << "^{";
  if (e2 % 2 == 0) {
    os << e2 / 2;
  } else {
    os << e2 << "/2";
  }
  os << "}";
}

}  // namespace

std::string latex_scalar(const Scalar& s) {
  std::ostringstream os;
  os << "\\left(";
  bool first = true;
  auto piece = [&](const Rational& r, const char* tail) {
    if (r == 0) return;
    if (!first && r > 0) os << "+";
    if (r == -1 && *tail) {
      os << "-";
    } else if (!(r == 1 && *tail)) {
      os << latex_rational(r);
    }
    os << tail;
    first = false;
  };
  piece(s.re, "");
  piece(s.re_s2, "\\sqrt{2}");
  piece(s.im, "i");
  piece(s.im_s2, "i\\sqrt{2}");
  if (first) os << "0";
  os << "\\right)";
  append_unit(os, "\\hbar", s.units.hbar2);
  append_unit(os, "m", s.units.mass2);
  append_unit(os, "\\omega", s.units.omega2);
  return os.str();
}

std::string latex_scalar_sum(const ScalarSum& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : s.parts()) {
    if (!first) os << " + ";
    os << latex_scalar(p);
    first = false;
  }
  return os.str();
}

std::string latex_operator_poly(const OperatorPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    if (!first) os << " + ";
    const bool unit_coeff =
        c == ScalarSum(Scalar::one()) && (key.dag > 0 || key.ann > 0);
    bool need_sep = false;
    if (!unit_coeff) {
      os << latex_scalar_sum(c);
      need_sep = true;
    }
    auto put = [&](const std::string& sym) {
      if (need_sep) os << "\\, ";
      os << sym;
      need_sep = true;
    };
    if (key.dag == 1) put("a^{\\dagger}");
    if (key.dag > 1) put("a^{\\dagger\\, " + std::to_string(key.dag) + "}");
    if (key.ann == 1) put("a");
    if (key.ann > 1) put("a^{" + std::to_string(key.ann) + "}");
    first = false;
  }
  return os.str();
}

std::string latex_diagonal_poly(const DiagonalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    if (p.coeff(k).is_zero()) continue;
    if (!first) os << " + ";
    os << latex_scalar_sum(p.coeff(k));
    if (k == 1) os << "\\, n";
    if (k > 1) os << "\\, n^{" << k << "}";
    first = false;
  }
  return os.str();
}

std::string latex_series(const OperatorSeries& s, const std::string& symbol) {
  std::ostringstream os;
  os << symbol << " = ";
  bool first = true;
  for (std::size_t m = 0; m <= s.order(); ++m) {
    if (s.at(m).is_zero()) continue;
    if (!first) os << " + ";
    if (m == 1) os << "\\lambda ";
    if (m > 1) os << "\\lambda^{" << m << "} ";
    os << "\\left[" << latex_operator_poly(s.at(m)) << "\\right]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string latex_document(const std::vector<std::string>& display_lines) {
  std::ostringstream os;
  os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
  for (const auto& line : display_lines) {
    os << "\\begin{equation*}\n" << line << "\n\\end{equation*}\n";
  }
  os << "\\end{document}\n";
  return os.str();
}

}  // namespace ladderkit
