#ifndef LADDERKIT_PARSER_HPP
#define LADDERKIT_PARSER_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladderkit/operator_poly.hpp"

namespace ladderkit {

/// Expression AST for perturbations and observables. Grammar (LL(1)):
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | power
///   power   := atom ('^' integer)?
///   atom    := rational | symbol | '(' expr ')'
///   symbol  := q | p | a | ad | N | i | sqrt2 | hbar | m | omega
///   rational:= integer ('/' integer)?
struct ExprAst {
  enum class Kind { Sum, Product, Power, Negate, Literal, Symbol };

  Kind kind;
  std::vector<std::unique_ptr<ExprAst>> children;
  Rational literal;     // Kind::Literal
  std::string symbol;   // Kind::Symbol
  unsigned exponent = 0;  // Kind::Power

  static std::unique_ptr<ExprAst> make(Kind k) {
    auto node = std::make_unique<ExprAst>();
    node->kind = k;
    return node;
  }
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  std::string expected;
  ParseError(std::size_t off, const std::string& msg, std::string exp)
      : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

std::unique_ptr<ExprAst> parse(const std::string& src);

/// Re-emit an AST as source text (reparses to an identical AST).
std::string emit(const ExprAst& ast);

/// Substitute ladder expansions for q and p, expand and normal-order.
OperatorPoly lower(const ExprAst& ast);

/// Parse + lower in one step.
OperatorPoly parse_operator(const std::string& src);

struct HermiticityResult {
  bool hermitian = false;
  OperatorPoly residue;  // x - dagger(x) when not Hermitian
};

HermiticityResult require_hermitian(const OperatorPoly& x);

}  // namespace ladderkit

#endif
