#include "ladderkit/parser.hpp"

#include <cctype>
#include <sstream>

namespace ladderkit {

namespace {

const char* kSymbols[] = {"q", "p", "a", "ad", "N", "i", "sqrt2", "hbar", "m", "omega"};

bool is_known_symbol(const std::string& s) {
  for (const char* k : kSymbols)
    if (s == k) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  std::unique_ptr<ExprAst> run() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError(pos_, "unexpected trailing input at offset " + std::to_string(pos_),
                       "end of input");
    }
    return e;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::unique_ptr<ExprAst> parse_expr() {
    auto node = ExprAst::make(ExprAst::Kind::Sum);
    node->children.push_back(parse_term());
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        node->children.push_back(parse_term());
      } else if (c == '-') {
        ++pos_;
        auto neg = ExprAst::make(ExprAst::Kind::Negate);
        neg->children.push_back(parse_term());
        node->children.push_back(std::move(neg));
      } else {
        break;
      }
    }
    if (node->children.size() == 1) return std::move(node->children[0]);
    return node;
  }

  std::unique_ptr<ExprAst> parse_term() {
    auto node = ExprAst::make(ExprAst::Kind::Product);
    node->children.push_back(parse_factor());
    while (peek() == '*') {
      ++pos_;
      node->children.push_back(parse_factor());
    }
    if (node->children.size() == 1) return std::move(node->children[0]);
    return node;
  }

  std::unique_ptr<ExprAst> parse_factor() {
    if (peek() == '-') {
      ++pos_;
      auto node = ExprAst::make(ExprAst::Kind::Negate);
      node->children.push_back(parse_factor());
      return node;
    }
    return parse_power();
  }

  std::unique_ptr<ExprAst> parse_power() {
    auto base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        throw ParseError(at, "exponent must be a non-negative integer at offset " +
                                 std::to_string(at),
                         "integer");
      }
      unsigned e = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(src_[pos_] - '0');
        ++pos_;
      }
      auto node = ExprAst::make(ExprAst::Kind::Power);
      node->exponent = e;
      node->children.push_back(std::move(base));
      return node;
    }
    return base;
  }

  std::unique_ptr<ExprAst> parse_atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      auto e = parse_expr();
      if (peek() != ')') {
        throw ParseError(pos_, "expected ')' at offset " + std::to_string(pos_), ")");
      }
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return parse_rational();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
        name += src_[pos_];
        ++pos_;
      }
      if (!is_known_symbol(name)) {
        throw ParseError(at, "unknown symbol '" + name + "' at offset " + std::to_string(at),
                         "q|p|a|ad|N|i|sqrt2|hbar|m|omega");
      }
      auto node = ExprAst::make(ExprAst::Kind::Symbol);
      node->symbol = name;
      return node;
    }
    throw ParseError(at, "expected an operand at offset " + std::to_string(at),
                     "number, symbol or '('");
  }

  std::unique_ptr<ExprAst> parse_rational() {
    mpz_class num = parse_integer();
    mpz_class den = 1;
    // Lookahead: '/' followed by a digit is a rational literal, anything
    // else is left for the caller.
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        den = parse_integer();
        if (den == 0) {
          throw ParseError(save, "zero denominator at offset " + std::to_string(save),
                           "nonzero integer");
        }
      } else {
        pos_ = save;
      }
    } else {
      pos_ = save;
    }
    auto node = ExprAst::make(ExprAst::Kind::Literal);
    node->literal = Rational(num, den);
    node->literal.canonicalize();
    return node;
  }

  mpz_class parse_integer() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      digits += src_[pos_];
      ++pos_;
    }
    return mpz_class(digits);
  }
};

OperatorPoly symbol_poly(const std::string& name) {
  if (name == "q") return OperatorPoly::position();
  if (name == "p") return OperatorPoly::momentum();
  if (name == "a") return OperatorPoly::annihilator();
  if (name == "ad") return OperatorPoly::creator();
  if (name == "N") return OperatorPoly::number();
  if (name == "i") return OperatorPoly(ScalarSum(Scalar::imag_unit()));
  if (name == "sqrt2") return OperatorPoly(ScalarSum(Scalar::sqrt2()));
  if (name == "hbar")
    return OperatorPoly(ScalarSum(Scalar::units_scalar(Rational(1), UnitMonomial{2, 0, 0})));
  if (name == "m")
    return OperatorPoly(ScalarSum(Scalar::units_scalar(Rational(1), UnitMonomial{0, 2, 0})));
  if (name == "omega")
    return OperatorPoly(ScalarSum(Scalar::units_scalar(Rational(1), UnitMonomial{0, 0, 2})));
  throw std::logic_error("unreachable symbol " + name);
}

}  // namespace

std::unique_ptr<ExprAst> parse(const std::string& src) { return Parser(src).run(); }

std::string emit(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Literal:
      return ast.literal.get_str();
    case ExprAst::Kind::Symbol:
      return ast.symbol;
    case ExprAst::Kind::Negate:
      return "-" + emit(*ast.children[0]);
    case ExprAst::Kind::Power:
      return emit(*ast.children[0]) + "^" + std::to_string(ast.exponent);
    case ExprAst::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) out += "*";
        out += emit(*ast.children[i]);
      }
      return out;
    }
    case ExprAst::Kind::Sum: {
      std::string out = "(";
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        const ExprAst& child = *ast.children[i];
        if (i == 0) {
          out += emit(child);
        } else if (child.kind == ExprAst::Kind::Negate) {
          out += " - " + emit(*child.children[0]);
        } else {
          out += " + " + emit(child);
        }
      }
      return out + ")";
    }
  }
  return "";
}

OperatorPoly lower(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Literal:
      return OperatorPoly(ScalarSum(Scalar{ast.literal}));
    case ExprAst::Kind::Symbol:
      return symbol_poly(ast.symbol);
    case ExprAst::Kind::Negate:
      return -lower(*ast.children[0]);
    case ExprAst::Kind::Power:
      return poly_pow(lower(*ast.children[0]), ast.exponent);
    case ExprAst::Kind::Product: {
      OperatorPoly out = OperatorPoly::identity();
      for (const auto& child : ast.children) out = normal_order_product(out, lower(*child));
      return out;
    }
    case ExprAst::Kind::Sum: {
      OperatorPoly out;
      for (const auto& child : ast.children) out += lower(*child);
      return out;
    }
  }
  return {};
}

OperatorPoly parse_operator(const std::string& src) { return lower(*parse(src)); }

HermiticityResult require_hermitian(const OperatorPoly& x) {
  HermiticityResult out;
  out.residue = x - dagger(x);
  out.hermitian = out.residue.is_zero();
  return out;
}

}  // namespace ladderkit
