#pragma once

#include "borelcover/borel.hpp"
#include "borelcover/hilbert.hpp"
#include "borelcover/marked.hpp"

#include <optional>
#include <string>
#include <vector>

namespace borelcover {

struct EmptyChart {
  MonomialIdeal J;  // generated in degree r
  HilbertPoly hp;   // Hilbert polynomial of S/J
};

struct Classification {
  ChartConstants constants;
  std::vector<MonomialIdeal> charts;  // degree-r Borel ideals whose quotient has polynomial p
  std::vector<EmptyChart> empty_charts;
};

/// Splits the Borel ideals generated by s monomials of degree r according to the Hilbert
/// polynomial of their quotient.
Classification classify_grassmannian_borel(const ChartConstants& k, const EnumerationOptions& opts = {});

/// |B_{J1} \ B_{J2}| for two ideals generated in the same single degree.
long gluing_degree(const MonomialIdeal& J1, const MonomialIdeal& J2);

enum class MChoice { Rho, Reg, Gotzmann };

MChoice parse_m_choice(const std::string& text);
std::string to_string(MChoice m);

struct EquationSummary {
  int m = 0;
  long num_vars = 0;
  std::vector<std::string> generators;
  int max_degree = 0;
  std::optional<Integer> bound_count;  // only for m >= reg(J^sat)
  std::optional<int> bound_degree;

  bool operator==(const EquationSummary&) const = default;
};

EquationSummary summarize_equations(const SchemeIdeal& ideal);

struct AtlasChart {
  MonomialIdeal Jsat;
  int reg = 0;
  int rho = 0;
  long dim_rho = 0;       // template variables at m = max(rho - 1, 0)
  long dim_reg = 0;       // at m = reg(J^sat)
  long dim_gotzmann = 0;  // at m = r, equal to p(r) q(r)
  std::optional<EquationSummary> equations;

  bool operator==(const AtlasChart&) const = default;
};

struct AtlasEmptyChart {
  MonomialIdeal J;
  HilbertPoly hp;
  bool operator==(const AtlasEmptyChart&) const = default;
};

struct Atlas {
  int n = 0;
  HilbertPoly p;
  int r = 0;
  long s = 0;
  long D = 0;
  std::vector<AtlasChart> charts;
  std::vector<AtlasEmptyChart> empty_charts;
  std::vector<std::vector<long>> gluing;  // between the charts' degree-r truncations

  bool operator==(const Atlas&) const = default;
};

struct AtlasOptions {
  bool with_equations = false;
  MChoice m = MChoice::Rho;
  int threads = 1;
  EnumerationOptions enumeration;
};

Atlas atlas(int n, const HilbertPoly& p, const AtlasOptions& opts = {});

}  // namespace borelcover
