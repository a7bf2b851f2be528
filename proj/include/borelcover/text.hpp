#pragma once

#include "borelcover/monomial.hpp"
#include "borelcover/param_poly.hpp"
#include "borelcover/poly.hpp"

#include <string>
#include <string_view>

namespace borelcover {

// Canonical text form: terms joined by " + " / " - ", coefficients as a/b (no "/1"),
// monomials as x2^2*x1 with zero exponents omitted, parameters as C[i,j].

std::string to_string(const Monomial& m);
std::string to_string(const CVar& v);
std::string to_string(const CMonomial& m);
std::string to_string(const ParamPoly& p);
std::string to_string(const XPoly& p);
std::string to_string(const ParamXPoly& p);

/// Parsers accept +, -, *, ^, integer and a/b literals, parentheses, x<i> and C[i,j].
/// All throw ParseError on malformed input or when a variable is out of range.
XPoly parse_xpoly(std::string_view text, int n);
ParamPoly parse_param_poly(std::string_view text);
ParamXPoly parse_param_xpoly(std::string_view text, int n);
Monomial parse_monomial(std::string_view text, int n);

/// Largest x-variable index mentioned in the text, or -1.
int max_variable_index(std::string_view text);

}  // namespace borelcover

namespace borelcover {

/// Coefficients (constant first) of an expression in the single variable t.
std::vector<Rational> parse_univariate_t(std::string_view text);

}  // namespace borelcover
