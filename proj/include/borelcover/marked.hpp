#pragma once

#include "borelcover/borel.hpp"
#include "borelcover/chart.hpp"
#include "borelcover/hilbert.hpp"
#include "borelcover/param_poly.hpp"
#include "borelcover/poly.hpp"

#include <unordered_map>
#include <vector>

namespace borelcover {

/// F_alpha = x^alpha - sum_gamma C[i,j] x^gamma over the truncation J = (J^sat)_{>=m}:
/// i indexes B_J in canonical order and j indexes N(J)_{|alpha|} in descending degrevlex order.
struct MarkedTemplate {
  int n = 0;
  int m = 0;
  MonomialIdeal Jsat;
  MonomialIdeal J;
  HilbertPoly hp;  // Hilbert polynomial of S/J
  std::vector<std::vector<Monomial>> tails;  // tails[i] = N(J)_{|alpha_i|}
  std::vector<ParamXPoly> F;
  long num_vars = 0;

  const std::vector<Monomial>& heads() const { return J.basis(); }
  /// All C-variables in index order.
  std::vector<CVar> variables() const;
};

/// Lowest truncation degree covered by the chart isomorphism: max(rho - 1, 0).
int min_template_degree(const MonomialIdeal& Jsat);

/// Throws DomainError unless Jsat is saturated and Borel and either m >= rho - 1 or the
/// truncation at m equals the truncation at rho - 1.
MarkedTemplate marked_template(const MonomialIdeal& Jsat, int m);

/// Eliahou-Kervaire pair: x_var * x^alpha = x^eta * x^beta (star decomposition).
struct SPair {
  int alpha = 0;  // 0-based head index
  int var = 0;
  int beta = 0;
  Monomial eta;
};

/// One pair for each generator x^alpha and each x_j > min(x^alpha), in that order.
std::vector<SPair> ek_spairs(const MonomialIdeal& J);

/// x_var F_alpha - x^eta F_beta.
ParamXPoly spair_polynomial(const SPair& pair, const MarkedTemplate& T);

enum class Selection { LargestFirst, SmallestFirst };

struct ReduceOptions {
  Selection selection = Selection::LargestFirst;
  /// 0 means the default 10 (d + 2) N(deg h).
  long step_cap = 0;
};

struct ReduceStats {
  long steps = 0;
  /// Longest sequence of rewritings where each step rewrites a monomial produced by the previous one.
  int longest_chain = 0;
};

/// Rewrites every monomial of J in the support of h via its star decomposition until the
/// support lies in N(J). Throws Error when the step cap is exceeded.
ParamXPoly reduce(const ParamXPoly& h, const MarkedTemplate& T, const ReduceOptions& opts = {},
                  ReduceStats* stats = nullptr);

struct SchemeOptions {
  ReduceOptions reduce;
  int threads = 1;
};

/// Generators of the ideal defining the marked scheme Mf((J^sat)_{>=m}) inside A^{num_vars}.
struct SchemeIdeal {
  MarkedTemplate T;
  std::vector<ParamPoly> generators;
  int max_degree = 0;  // 0 when there are no generators
  long spairs = 0;
  int longest_chain = 0;
};

SchemeIdeal scheme_equations(const MonomialIdeal& Jsat, int m, const SchemeOptions& opts = {});

/// Specialized marked set: every C[i,j] replaced by its value.
std::vector<MarkedPoly> specialize_template(const MarkedTemplate& T, const Assignment& values);

/// Checks that G is a marked set over J (throws DomainError otherwise) and that
/// dim (G)_t = dim J_t for t in [m, max(r, m) + 1], m the smallest generator degree of J.
bool is_marked_basis(const std::vector<MarkedPoly>& G, const MonomialIdeal& J, int r);

long embedding_dimension(const MonomialIdeal& Jsat, int m);

struct EquationBounds {
  Integer max_count;
  int max_degree = 0;
};

/// (q(m)(n+1) - q(m+1)) p(m+1) equations of degree <= d + 2; needs m >= reg(J^sat).
EquationBounds equation_bounds(const MonomialIdeal& Jsat, int m);

/// C((n+1)s, s'+1) * C(N(r+1), s'+1): the number of maximal minors a direct rank condition
/// on M(S_1 I_r, r+1) would need.
Integer naive_minor_count(int n, const HilbertPoly& p);

}  // namespace borelcover
