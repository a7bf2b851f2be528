#pragma once

#include "borelcover/hilbert.hpp"
#include "borelcover/monomial_ideal.hpp"

#include <vector>

namespace borelcover {

/// Checks closure of J under increasing moves x_j -> x_i (i > j) on the generators.
bool is_strongly_stable(const MonomialIdeal& J);

/// Is b reachable from a by increasing elementary moves (b >=_B a)? Breadth-first search.
bool borel_leq(const Monomial& a, const Monomial& b);

/// J^sat of a Borel ideal: the generators with x_0 set to 1, re-minimalized.
MonomialIdeal saturate(const MonomialIdeal& J);

/// (J : m^infinity) for an arbitrary monomial ideal, as the intersection of the (J : x_j^infinity).
MonomialIdeal saturate_general(const MonomialIdeal& J);

/// Maximal generator degree of a Borel ideal (0 for the zero ideal).
int regularity(const MonomialIdeal& J);

/// Minimal basis of J_{>=m}.
MonomialIdeal truncate(const MonomialIdeal& J, int m);

/// I == (I^sat)_{>=m}.
bool is_m_truncation(const MonomialIdeal& I, int m);
/// is_m_truncation at the smallest generator degree.
bool is_truncation(const MonomialIdeal& I);

/// Largest degree of a generator divisible by x_1, or 0 if there is none.
int rho(const MonomialIdeal& Jsat);

struct StarDecomposition {
  Monomial eta;
  Monomial alpha;
};

/// Writes gamma = eta * alpha with alpha in B_J by stripping the smallest variable until a
/// generator is reached. Throws DomainError if gamma is not in J or J is not Borel along the path.
StarDecomposition star_decompose(const Monomial& gamma, const MonomialIdeal& J);

struct EnumerationOptions {
  /// Maximum number of search nodes before ScaleCapError.
  long node_cap = 20'000'000;
};

/// All Borel ideals generated by exactly s monomials of degree r, in canonical order.
std::vector<MonomialIdeal> enumerate_borel_in_G(int n, int r, long s, const EnumerationOptions& opts = {});

/// The saturated Borel ideals with Hilbert polynomial p, sorted by regularity
/// (ties broken by canonical_less).
std::vector<MonomialIdeal> enumerate_borel_saturated(int n, const HilbertPoly& p,
                                                     const EnumerationOptions& opts = {});

/// A Borel ideal generated in one degree r together with cached saturation data.
struct BorelChartIdeal {
  MonomialIdeal J;
  MonomialIdeal sat;
  int r = 0;
  int reg_sat = 0;
  int rho = 0;
};

BorelChartIdeal make_chart_ideal(const MonomialIdeal& J);

}  // namespace borelcover
