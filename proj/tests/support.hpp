#pragma once

#include "borelcover/chart.hpp"
#include "borelcover/marked.hpp"
#include "borelcover/monomial_ideal.hpp"
#include "borelcover/poly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testing {

using namespace borelcover;

/// Small deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  Rational rational(long bound = 5);
  Monomial monomial(int n, int degree);
  XPoly form(int n, int degree, int terms, long bound = 5);
  CoordinateChange invertible(int n, long bound = 3);

 private:
  std::mt19937_64 engine_;
};

/// b >=_B a via partial sums: sum_{i>=k} b_i >= sum_{i>=k} a_i for every k.
bool borel_leq_partial_sums(const Monomial& a, const Monomial& b);

/// All s-subsets of the degree-r monomials closed under increasing moves, by brute force.
std::set<std::vector<Monomial>> brute_force_borel_sets(int n, int r, int s);

/// Degree-t monomials outside J, counted by explicit divisibility tests.
long count_outside(const MonomialIdeal& J, int t);

/// Evaluates a form at an integer point.
Rational evaluate(const XPoly& f, const std::vector<long>& point);

/// Degree-t forms vanishing on the given points (kernel of evaluation).
std::vector<XPoly> vanishing_forms(int n, int t, const std::vector<std::vector<long>>& points);

/// Chart parameters of the ideal of random points in the template's chart, or nullopt if the
/// drawn points are not in the chart. Only meaningful for constant Hilbert polynomials.
std::optional<Assignment> point_configuration(const MarkedTemplate& T, Rng& rng, long bound = 4);

/// Chart parameters in `high` of the ideal generated by a random point of `low`, where every
/// point of `low` is a marked basis (an affine chart). Works for any Hilbert polynomial.
std::optional<Assignment> lifted_configuration(const MarkedTemplate& low, const MarkedTemplate& high, Rng& rng,
                                               long bound = 3);

/// Random values for every template variable.
Assignment random_assignment(const MarkedTemplate& T, Rng& rng, long bound = 3);

/// Do all generators vanish at the assignment?
bool vanishes(const std::vector<ParamPoly>& gens, const Assignment& a);

}  // namespace testing
