#pragma once

#include <map>
#include <string>

#include "qspect/structured.hpp"

namespace qspect {

/// Named operator data referenced from expressions: D(name) resolves in
/// `diagonals`, F(name) in `patches`.
struct Environment {
  std::map<std::string, DiagonalSpec> diagonals;
  std::map<std::string, FiniteRankPatch> patches;
};

/// Recursive-descent parser for the operator expression language
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' UINT)?
///   atom   := 'S' | "S'" | 'I' | 'D(' NAME ')' | 'F(' NAME ')'
///           | REAL | 'q(' REAL ',' REAL ',' REAL ',' REAL ')' | '(' expr ')'
///
/// Whitespace is insignificant.  Scalars become constant diagonals.
/// Throws SyntaxError carrying the byte offset of the offending token
/// and UnknownName for unresolvable D/F references.
StructuredOperator parse_expr(const std::string& text, const Environment& env);

inline StructuredOperator parse_expr(const std::string& text) {
  return parse_expr(text, Environment{});
}

}  // namespace qspect
