#pragma once

// Text syntax for formulas.
//
//   expr   := unary (binop unary)*          all binary ops left-associative,
//   binop  := '|' | '&' | '->' [int]        one precedence level
//           | '<->' [int] | '=>c' | '=>g'
//   unary  := '~' unary | '*' unary | atom
//   atom   := 'p' int | '0' | '1' | '(' expr ')'
//           | 'D[' int '/' int '](' expr ')'    Delta_a
//           | 'X[' int '/' int '](' expr ')'    chi_a
//
// '->' without an index uses the matrix filter index given at expansion.

#include <memory>
#include <string>
#include <vector>

#include "lukstar/formula.hpp"
#include "lukstar/term_synth.hpp"

namespace lukstar {

struct Syntax {
  enum class Kind {
    Var, Zero, One, Neg, Star, Join, Meet, Arrow, Iff, Crisp, Goedel, Delta, Chi
  };
  Kind kind;
  int var = -1;
  int index = -1;         // Arrow/Iff filter index, -1 = default
  int num = 0, den = 1;   // Delta/Chi parameter
  std::vector<std::shared_ptr<const Syntax>> args;

  std::string to_string() const;
};

using SyntaxPtr = std::shared_ptr<const Syntax>;

/// Throws SyntaxError with the byte offset of the problem.
SyntaxPtr parse(const std::string& text);

/// Expands macros for L*_{n+1}; default_i resolves bare '->' and '<->'.
/// Throws OutOfRange if a parameter is not an element of L_{n+1}.
Formula expand(const SyntaxPtr& s, const Connectives& c, int default_i);

/// parse + expand.
Formula parse_formula(const std::string& text, const Connectives& c,
                      int default_i);

}  // namespace lukstar
