#include "borelcover/cover.hpp"

#include "borelcover/errors.hpp"
#include "borelcover/text.hpp"

#include <algorithm>
#include <unordered_set>

namespace borelcover {

Classification classify_grassmannian_borel(const ChartConstants& k, const EnumerationOptions& opts) {
  Classification out;
  out.constants = k;
  for (auto& J : enumerate_borel_in_G(k.n, k.r, k.s, opts)) {
    HilbertPoly hp = hilbert_polynomial(J);
    if (hp == k.p) {
      out.charts.push_back(std::move(J));
    } else {
      out.empty_charts.push_back({std::move(J), std::move(hp)});
    }
  }
  return out;
}

long gluing_degree(const MonomialIdeal& J1, const MonomialIdeal& J2) {
  if (J1.n() != J2.n()) throw DomainError("ideals live in different ambient rings");
  if (J1.is_zero() || J2.is_zero() || !J1.is_single_degree() || !J2.is_single_degree() ||
      J1.min_degree() != J2.min_degree()) {
    throw DomainError("gluing degree needs ideals generated in one common degree");
  }
  long count = 0;
  for (const auto& b : J1.basis()) {
    if (!J2.is_generator(b)) ++count;
  }
  return count;
}

MChoice parse_m_choice(const std::string& text) {
  if (text == "rho") return MChoice::Rho;
  if (text == "reg") return MChoice::Reg;
  if (text == "gotzmann") return MChoice::Gotzmann;
  throw ParseError("unknown truncation choice '" + text + "' (expected rho, reg or gotzmann)");
}

std::string to_string(MChoice m) {
  switch (m) {
    case MChoice::Rho: return "rho";
    case MChoice::Reg: return "reg";
    case MChoice::Gotzmann: return "gotzmann";
  }
  return "rho";
}

EquationSummary summarize_equations(const SchemeIdeal& ideal) {
  EquationSummary s;
  s.m = ideal.T.m;
  s.num_vars = ideal.T.num_vars;
  for (const auto& g : ideal.generators) s.generators.push_back(to_string(g));
  s.max_degree = ideal.max_degree;
  if (ideal.T.m >= regularity(ideal.T.Jsat)) {
    EquationBounds b = equation_bounds(ideal.T.Jsat, ideal.T.m);
    s.bound_count = b.max_count;
    s.bound_degree = b.max_degree;
  }
  return s;
}

Atlas atlas(int n, const HilbertPoly& p, const AtlasOptions& opts) {
  const ChartConstants k = chart_constants(p, n);
  Atlas a;
  a.n = n;
  a.p = p;
  a.r = k.r;
  a.s = k.s;
  a.D = k.D;
  for (const auto& Jsat : enumerate_borel_saturated(n, p, opts.enumeration)) {
    AtlasChart c;
    c.Jsat = Jsat;
    c.reg = regularity(Jsat);
    c.rho = rho(Jsat);
    c.dim_rho = embedding_dimension(Jsat, min_template_degree(Jsat));
    c.dim_reg = embedding_dimension(Jsat, c.reg);
    c.dim_gotzmann = embedding_dimension(Jsat, k.r);
    if (opts.with_equations) {
      const int m = opts.m == MChoice::Rho ? min_template_degree(Jsat) : opts.m == MChoice::Reg ? c.reg : k.r;
      SchemeOptions so;
      so.threads = opts.threads;
      c.equations = summarize_equations(scheme_equations(Jsat, m, so));
    }
    a.charts.push_back(std::move(c));
  }
  Classification cl = classify_grassmannian_borel(k, opts.enumeration);
  for (auto& e : cl.empty_charts) a.empty_charts.push_back({std::move(e.J), std::move(e.hp)});
  std::vector<MonomialIdeal> truncations;
  for (const auto& c : a.charts) truncations.push_back(truncate(c.Jsat, k.r));
  a.gluing.assign(truncations.size(), std::vector<long>(truncations.size(), 0));
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    for (std::size_t j = 0; j < truncations.size(); ++j) a.gluing[i][j] = gluing_degree(truncations[i], truncations[j]);
  }
  return a;
}

}  // namespace borelcover
