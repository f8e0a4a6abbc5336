#pragma once

#include "higgs/ratfn.hpp"

#include <string>

namespace higgs::io {

struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Parses the fixture expression grammar into an exact rational function over
// the given variables:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-')* atom ('^' integer)?
//   atom   := integer | variable | '(' expr ')'
//
// Variables are the single letters y, u, v, a, b. When the target VarSet
// carries the half-power variables a, b instead of u, v, the letters u and v
// stand for a^2 and b^2. Whitespace, including newlines, is insignificant.
RationalFn parse_expression(const std::string& text, const VarSet& vars);

} // namespace higgs::io
