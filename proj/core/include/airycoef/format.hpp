#pragma once

#include <string>
#include <string_view>

#include "airycoef/ratfunc.hpp"

namespace airycoef {

/// Plain infix, e.g. "eta^2-3*eta*xi+1/2". Terms in decreasing grlex order.
std::string to_string(const MultiPoly& p);

/// Plain infix with square-free factored numerator and denominator and the
/// numeric constant pulled out, e.g. "280*(eta^3+29*eta^2+65*eta+13)/(eta-1)^11".
/// parse_ratfunc() reads it back.
std::string to_string(const RatFunc& f);

std::string to_latex(const MultiPoly& p);
std::string to_latex(const RatFunc& f);

/// Reads + - * / ^ (integer exponents), parentheses, integer or decimal
/// literals and identifiers. Unknown identifiers are interned.
/// Throws ParseError on malformed input and DivisionByZeroError on x/0.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace airycoef
