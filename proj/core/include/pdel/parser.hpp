#pragma once

#include <string>

#include "pdel/formula.hpp"

namespace pdel {

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Concrete grammar:
///   formula  := or_expr ( "->" formula | "<->" formula )?
///   or_expr  := and_expr ( "|" and_expr )*
///   and_expr := unary ( "&" unary )*
///   unary    := "~" unary | "dia[" agent "]" unary | "box[" agent "]" unary
///             | "[" name "," event "]" unary | "<" name "," event ">" unary
///             | "pr[" agent "](" linterm ("+"|"-") ... (">="|">") rat ")"
///             | "true" | "false" | atom | "(" formula ")"
///   linterm  := rat "*" "mu(" formula ")" | "mu(" formula ")" | "0"
/// Atoms are [a-z][a-zA-Z0-9_]*; event-structure and event names are
/// [a-zA-Z][a-zA-Z0-9_]*. Rationals are "p/q", integers, or exact decimals.
Formula parse_formula(const std::string& text);

}  // namespace pdel
