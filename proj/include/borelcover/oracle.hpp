#pragma once

#include "borelcover/param_poly.hpp"

#include <set>
#include <vector>

namespace borelcover {

/// Term order on Q[C]. C[1,1] is the largest variable and smaller CVar means larger variable.
/// The elimination order compares the eliminated block first (degrevlex), then the rest.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder({}); }
  static MonomialOrder elimination(std::set<CVar> eliminated) { return MonomialOrder(std::move(eliminated)); }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const CMonomial& a, const CMonomial& b) const;

 private:
  explicit MonomialOrder(std::set<CVar> block) : block_(std::move(block)) {}
  std::set<CVar> block_;
};

struct GroebnerOptions {
  std::size_t max_basis = 2000;
  long max_pairs = 200000;
};

/// Reduced Groebner basis (monic, sorted by leading term). Throws ScaleCapError on the caps.
std::vector<ParamPoly> groebner_basis(const std::vector<ParamPoly>& gens, const MonomialOrder& order,
                                      const GroebnerOptions& opts = {});

ParamPoly normal_form(const ParamPoly& f, const std::vector<ParamPoly>& basis, const MonomialOrder& order);

/// Mutual membership of the generators of a and b.
bool ideal_equal(const std::vector<ParamPoly>& a, const std::vector<ParamPoly>& b,
                 const MonomialOrder& order = MonomialOrder::degrevlex(), const GroebnerOptions& opts = {});

struct LinearElimination {
  std::vector<ParamPoly> residual;
  std::vector<CVar> eliminated;
};

/// Repeatedly picks the first generator (in list order) containing a variable (in index order)
/// whose only occurrence is a degree-one term with constant coefficient, solves for it and
/// substitutes into the remaining generators.
LinearElimination greedy_linear_eliminate(const std::vector<ParamPoly>& gens);

}  // namespace borelcover
