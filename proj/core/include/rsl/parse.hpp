#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rsl/piecewise.hpp"

namespace rsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Neg,  // arithmetic negation (prefix minus)
    Pow,
    Abs,
    Max,
    Min,
    PosPart,  // pos(e) = e v 0
    NegPart,  // neg(e) = (-e) v 0
    Piecewise
  };
  Kind kind = Kind::Const;
  Rational value;                // Const
  int exponent = 0;              // Pow
  std::vector<ExprPtr> children;
  std::vector<Rational> bounds;  // Piecewise: children.size() + 1 entries
};

// Grammar:
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := ['-'] base ('^' UINT)?
//   base     := RATIONAL | 't' | '(' expr ')'
//             | abs '(' expr ')' | pos '(' expr ')' | neg '(' expr ')'
//             | max '(' expr ',' expr ')' | min '(' expr ',' expr ')'
//             | piecewise '{' range ':' expr (';' range ':' expr)* '}'
//   range    := '[' SIGNED ',' SIGNED (']' | ')')
//   RATIONAL := UINT ['/' UINT]
// The leading '-' of an expr negates its whole first term. pos/neg are the
// lattice positive/negative parts; the prefix minus is arithmetic negation.
// Consecutive ranges must chain (each lower bound equals the previous upper
// bound). Errors carry the column in Error(SyntaxError).
ExprPtr parse_expr(const std::string& text);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Prints a form that reparses to a structurally equal tree. (Synthetic trees
// holding negative Const values reparse as negations instead; the parser
// itself never builds those.)
std::string print_expr(const ExprPtr& e);

// Pointwise evaluation straight off the tree, with half-open range lookup
// for piecewise blocks (the last range is closed). Points missing every
// range throw Error(OutOfDomain). Serves as an independent check on the
// realization below.
Rational eval_expr(const ExprPtr& e, const Rational& t);

// Realization on dom. Piecewise blocks must tile [a, b] exactly
// (Error(SchemaError)) and agree at interior seams
// (Error(DiscontinuousPiecewise), naming the split point); a degree cap on
// dom is enforced throughout (Error(DegreeCapExceeded)).
PiecewisePoly elaborate(const ExprPtr& e, const Domain& dom);

}  // namespace rsl
