#include "borelcover/fixtures.hpp"

#include "borelcover/borel.hpp"
#include "borelcover/text.hpp"

namespace borelcover::fixtures {

MonomialIdeal ideal(int n, const std::vector<std::string>& gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens) monos.push_back(parse_monomial(g, n));
  return MonomialIdeal(n, std::move(monos));
}

std::vector<XPoly> polys(int n, const std::vector<std::string>& gens) {
  std::vector<XPoly> out;
  for (const auto& g : gens) out.push_back(parse_xpoly(g, n));
  return out;
}

MonomialIdeal points4_chart() { return ideal(2, {"x2^2", "x2*x1", "x1^3"}); }

MonomialIdeal points4_line_chart() { return ideal(2, {"x2", "x1^4"}); }

std::vector<XPoly> points4_double_points() { return polys(2, {"x2^2", "x1^2"}); }

CoordinateChange points4_shear() {
  return {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
}

std::vector<std::string> points4_marked_basis() {
  return {"x2^4",      "x2^3*x1",      "x2^3*x0",    "x2^2*x1^2",
          "x2^2*x1*x0", "x2^2*x0^2",   "x1^4",       "x2*x1^3",
          "x1^3*x0",    "x2*x1^2*x0",  "x2*x1*x0^2 + 1/2*x1^2*x0^2"};
}

std::vector<std::string> points4_chart_equations() {
  return {
      "-C[2,1]*C[2,2]*C[2,4] - C[2,2]*C[1,4] + C[1,2]*C[2,4] + C[1,1]*C[3,4] - C[2,1]^2*C[3,4] - C[2,3]*C[2,4]",
      "-C[2,3]*C[2,2] - C[2,1]*C[2,2]^2 - C[2,4] + C[1,1]*C[3,2] - C[2,1]^2*C[3,2]",
      "C[1,4] - C[2,1]*C[2,2]*C[2,3] - C[2,1]*C[2,4] - C[2,1]^2*C[3,3] - C[2,3]^2 + C[1,1]*C[3,3] + "
      "C[1,2]*C[2,3] - C[2,2]*C[1,3]",
      "-C[2,1]^2*C[3,1] + C[1,3] - C[2,2]*C[1,1] + C[1,2]*C[2,1] - C[2,1]^2*C[2,2] + C[1,1]*C[3,1] - "
      "2*C[2,3]*C[2,1]",
      "C[2,2]^2*C[2,4] - C[3,3]*C[2,4] + C[2,1]*C[3,2]*C[2,4] + C[2,1]*C[2,2]*C[3,4] + C[2,3]*C[3,4] - "
      "C[3,2]*C[1,4] - C[3,1]*C[2,2]*C[2,4]",
      "2*C[2,1]*C[3,2]*C[2,2] - C[3,4] - C[3,3]*C[2,2] - C[3,1]*C[2,2]^2 + C[2,3]*C[3,2] + C[2,2]^3 - "
      "C[3,2]*C[1,2]",
      "C[2,1]*C[3,2]*C[2,3] + C[2,2]*C[2,4] + C[2,1]*C[2,2]*C[3,3] - C[3,1]*C[2,2]*C[2,3] - C[3,1]*C[2,4] + "
      "C[2,1]*C[3,4] - C[3,2]*C[1,3] + C[2,2]^2*C[2,3]",
      "C[2,1]^2*C[3,2] - C[1,1]*C[3,2] + C[2,1]*C[2,2]^2 + C[2,4] + C[2,3]*C[2,2]",
  };
}

std::vector<std::string> points4_linear_variables() { return {"C[1,3]", "C[1,4]", "C[2,4]", "C[3,4]"}; }

std::vector<XPoly> two_points() {
  return polys(2, {"x0^2 - x0*x2", "x1^2 - x1*x2", "x2^2 - x0*x2 - x1*x2", "x0*x1"});
}

MonomialIdeal two_points_chart() { return ideal(2, {"x0^2", "x1^2", "x2^2", "x0*x1"}); }

MonomialIdeal cubic_lex() { return ideal(3, {"x3", "x2^3"}); }

std::vector<EmptyChartFixture> cubic_empty_charts() {
  return {
      {truncate(ideal(3, {"x2^3", "x3^2", "x2^2*x1", "x3*x1", "x3*x2"}), 3), "2*t+3"},
      {truncate(ideal(3, {"x2^2", "x3^2", "x3*x1^2", "x3*x2"}), 3), "2*t+3"},
      {truncate(ideal(3, {"x2^3", "x3^2", "x2*x1^2", "x2^2*x1", "x3*x1^2", "x3*x2"}), 3), "t+6"},
      {truncate(ideal(3, {"x1^3", "x2^3", "x3^2", "x2*x1^2", "x2^2*x1", "x3*x1^2", "x3*x2^2", "x3*x2*x1"}), 3),
       "9"},
  };
}

std::vector<MonomialIdeal> points7_charts() {
  return {
      ideal(2, {"x2^2", "x2*x1^3", "x1^4"}),
      ideal(2, {"x2^3", "x2^2*x1", "x2*x1^2", "x1^4"}),
      ideal(2, {"x2^2", "x2*x1^2", "x1^5"}),
      ideal(2, {"x2^2", "x2*x1", "x1^6"}),
      ideal(2, {"x2", "x1^7"}),
  };
}

}  // namespace borelcover::fixtures
