#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "gross/number.hpp"

namespace gross {

// Surface syntax, lowest to highest precedence:
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?          right-associative
//   atom   := number | grossone | '(' expr ')'
//           | number grossone ('^' unary)?     implicit product, "2G^3" = 2*(G^3)
//   number := digits ('.' digits)?             decimals are exact rationals
//   grossone := "①" | "G" | "grossone" (case-insensitive)
//
// Implicit multiplication is allowed only between a numeric literal and a
// grossone atom and binds below '^', matching the conventional reading of
// numerals like "1.7①" and "5①^3.1".

enum class AstKind { Number, Grossone, Neg, Add, Sub, Mul, Div, Pow };

struct Ast {
  AstKind kind;
  Rational value;  // Number only
  std::unique_ptr<Ast> lhs;
  std::unique_ptr<Ast> rhs;
};

using AstPtr = std::unique_ptr<Ast>;

// Throws ParseError (with 1-based code-point position) on malformed input.
AstPtr parse(std::string_view text);

// Bottom-up evaluation into a canonical gross-number. '^' with the literal
// grossone atom on the right applies the 0^G / 1^G rule; a fractional
// rational exponent builds a grosspower directly from a single-term base.
GrossNumber eval_ast(const Ast& ast);

GrossNumber eval_string(std::string_view text);

enum class Style { Unicode, Ascii, Machine };

// Canonical rendering, terms in decreasing exponent order. Unit coefficients
// and unit exponents are elided; Machine emits the CLI's JSON record
// {"terms":[{"c":"num/den","p":"num/den"},...]}. Unicode/Ascii output parses
// back to the same value.
std::string format(const GrossNumber& x, Style style = Style::Unicode);

std::string grossone_symbol(Style style);

}  // namespace gross
