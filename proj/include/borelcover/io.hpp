#pragma once

#include "borelcover/cover.hpp"
#include "borelcover/monomial_ideal.hpp"
#include "borelcover/poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace borelcover {

using Json = nlohmann::ordered_json;

/// Returns the contents of the named file for `@path` arguments, the text itself otherwise.
std::string read_argument(std::string_view text);

/// Parses JSON, rethrowing syntax errors as ParseError.
Json parse_json(std::string_view text);

/// Rationals travel as JSON integers when integral and as "a/b" strings otherwise.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"n": 2, "gens": [[e0, e1, e2], ...]}
Json to_json(const MonomialIdeal& J);
MonomialIdeal monomial_ideal_from_json(const Json& j);

/// Inline JSON, @file, or a comma-separated text list such as "x2^2, x2*x1" (n defaults to the
/// largest variable index mentioned).
MonomialIdeal parse_monomial_ideal(std::string_view text, std::optional<int> n = std::nullopt);
std::string to_text(const MonomialIdeal& J);

/// Polynomial ideal: {"n": 2, "polys": ["x2^2", "x1^2"]}, a monomial ideal JSON, @file, or a
/// comma-separated text list.
struct PolyIdeal {
  int n = 0;
  std::vector<XPoly> gens;
};
PolyIdeal parse_poly_ideal(std::string_view text, std::optional<int> n = std::nullopt);
Json to_json(const PolyIdeal& I);

Json to_json(const CoordinateChange& g);
CoordinateChange coordinate_change_from_json(const Json& j);

/// Splits on commas outside parentheses and brackets.
std::vector<std::string> split_top_level(std::string_view text);

Json to_json(const EquationSummary& s);
EquationSummary equation_summary_from_json(const Json& j);

Json to_json(const Atlas& a);
Atlas atlas_from_json(const Json& j);

}  // namespace borelcover
