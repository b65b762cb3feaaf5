#pragma once
// Recursive-descent parser for scalar expressions.
//
// Grammar (whitespace ignored):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := ('+'|'-')* base ('^' integer)?
//   base    := integer | identifier | '(' expr ')'
// Identifiers are parameter names ([A-Za-z_][A-Za-z0-9_]*); '/' builds
// rational functions, so "1/2", "-b/a" and "(a+1)/(a-1)" all parse.

#include <string>

#include "exact/ratfunc.hpp"

namespace exact {

// Throws std::invalid_argument (syntax) or std::domain_error (division by
// an identically-zero expression).
RatFunc parse_ratfunc(const std::string& text);

// As parse_ratfunc, but requires the result to be polynomial (constant
// denominator); throws std::invalid_argument otherwise.
MultiPoly parse_poly(const std::string& text);

}  // namespace exact
