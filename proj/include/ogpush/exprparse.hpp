#pragma once

// Input language for characteristic classes and the canonical text form of
// polynomials.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' uint)?
//   atom   := rational | var | basis | '(' expr ')'
//   rational := uint ('/' uint)?
//   var    := ('z' | 't') uint
//   basis  := 's[' uint (',' uint)* ']' | ('e' | 'p' | 'h') uint

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ogpush/pushforward.hpp"

namespace ogpush {

struct ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

struct ClassExpr {
  struct Literal { Rat value; };
  struct Variable { VarId var; };
  struct Schur { std::vector<int> parts; };
  struct Basis { SymKind kind; int k; };
  struct Negate { ClassExprPtr operand; };
  struct Binary { char op; ClassExprPtr lhs, rhs; };  // '+', '-', '*'
  struct Power { ClassExprPtr base; unsigned exponent; };

  std::variant<Literal, Variable, Schur, Basis, Negate, Binary, Power> node;
  std::size_t position = 0;  // offset of the node in the source text
};

// Throws SyntaxError (with position), IndexOutOfRange, or NonPartition.
ClassExprPtr parse_class_expr(std::string_view text, int n);

// Evaluates to a polynomial in t1..tn, z1..zn.
MultiPoly evaluate(const ClassExpr& expr, int n);

// Evaluates and checks the result is a characteristic class.
CharClass elaborate(const ClassExpr& expr, int n);

// The partition when the whole expression is one Schur atom, as in "s[2,1]".
std::optional<Partition> single_schur_atom(const ClassExpr& expr, int n);

std::string format_poly(const MultiPoly& p);

// Joins (coefficient, monomial text) pairs in the order given: "1" for an
// empty monomial text, coefficients 1/-1 elided, " + " / " - " separators.
std::string format_terms(const std::vector<std::pair<Rat, std::string>>& terms);

}  // namespace ogpush
