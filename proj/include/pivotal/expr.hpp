#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pivotal/boolean_function.hpp"
#include "pivotal/configuration.hpp"

namespace pivotal {

/// AST of the function-call expression language:
///
///     expr  := var | const | "NOT(" expr ")" | op "(" expr ("," expr)+ ")"
///     op    := "AND" | "OR" | "XOR" | "MAJ"
///     var   := "x" digits        (index >= 1)
///     const := "0" | "1"
///
/// MAJ takes an odd number of children and is 1 iff strictly more than half
/// of them are 1. XOR is the parity of its children.
struct Expr {
  enum class Kind { Var, Const, Not, And, Or, Xor, Maj };

  Kind kind = Kind::Const;
  int var = 0;         // Var
  bool value = false;  // Const
  std::vector<Expr> children;

  static Expr variable(int index);
  static Expr constant(bool b);
  static Expr negation(Expr child);
  static Expr gate(Kind kind, std::vector<Expr> children);

  /// Largest variable index referenced (0 for closed expressions).
  int arity() const;

  bool operator==(const Expr&) const = default;
};

Expr parse_expr(std::string_view text);

/// Canonical text, e.g. "AND(x1, OR(x2, NOT(x3)))". parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

bool eval_expr(const Expr& e, const Configuration& omega);

/// Truth table of e over n >= e.arity() variables (bit-parallel evaluation).
BooleanFunction compile(const Expr& e, int n);

/// Oracle evaluating e at arity n (n >= e.arity()); no cap.
FunctionOracle expr_oracle(Expr e, int n);

}  // namespace pivotal
