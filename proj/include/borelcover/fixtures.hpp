#pragma once

#include "borelcover/monomial_ideal.hpp"
#include "borelcover/poly.hpp"

#include <string>
#include <vector>

// Reference data for well-known small Hilbert schemes, shared by the certify command and the tests.
namespace borelcover::fixtures {

/// Builds a monomial ideal from text generators such as {"x2^2", "x2*x1"}.
MonomialIdeal ideal(int n, const std::vector<std::string>& gens);
std::vector<XPoly> polys(int n, const std::vector<std::string>& gens);

// Four points in P^2 (p = 4).
MonomialIdeal points4_chart();                        // (x2^2, x2*x1, x1^3)
MonomialIdeal points4_line_chart();                   // (x2, x1^4)
std::vector<XPoly> points4_double_points();           // (x2^2, x1^2)
CoordinateChange points4_shear();                     // x1 -> x2 + x1
std::vector<std::string> points4_marked_basis();      // (x2^2, x2*x1, x1^3)_{>=4}-marked basis of the sheared ideal
/// Published generators of the chart ideal of (x2^2, x2*x1, x1^3) at m = 2, in 12 variables.
std::vector<std::string> points4_chart_equations();
/// The variables a linear elimination of those generators removes.
std::vector<std::string> points4_linear_variables();

// Two points in P^2 (p = 2) and a non-Borel chart that contains them.
std::vector<XPoly> two_points();
MonomialIdeal two_points_chart();

// Curves of degree 3 and genus 1 in P^3 (p = 3t).
MonomialIdeal cubic_lex();                            // (x3, x2^3)
struct EmptyChartFixture {
  MonomialIdeal J;  // generated in degree 3
  std::string hilbert_polynomial;
};
std::vector<EmptyChartFixture> cubic_empty_charts();

// Seven points in P^2 (p = 7): the saturated Borel ideals, by increasing regularity.
std::vector<MonomialIdeal> points7_charts();

}  // namespace borelcover::fixtures
