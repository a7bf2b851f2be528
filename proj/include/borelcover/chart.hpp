#pragma once

#include "borelcover/borel.hpp"
#include "borelcover/hilbert.hpp"
#include "borelcover/linalg.hpp"
#include "borelcover/monomial_ideal.hpp"
#include "borelcover/poly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace borelcover {

/// M(V, m): one row per form, columns are the degree-m monomials in descending degrevlex order.
/// Throws DomainError if a nonzero form is not homogeneous of degree m.
Matrix coefficient_matrix(const std::vector<XPoly>& forms, int n, int m);

/// Rows of a matrix over the degree-m monomial columns read back as forms.
std::vector<XPoly> forms_from_rows(const Matrix& rows, int n, int m);

/// Reduced echelon basis of the degree-t component of the ideal generated by `gens`
/// (all products of generators with monomials of complementary degree).
Echelon ideal_component(const std::vector<XPoly>& gens, int n, int t);
long component_dimension(const std::vector<XPoly>& gens, int n, int t);

/// Delta_J(I): the maximal minor of M(I, r) on the columns of B_J.
/// Needs exactly |B_J| forms of the common degree r of J's generators.
Rational pluecker_coordinate(const std::vector<XPoly>& forms, const MonomialIdeal& J);

/// Polynomial whose support meets the monomial ideal only in `head` (coefficient 1).
struct MarkedPoly {
  Monomial head;
  XPoly poly;
};

struct ChartPoint {
  MonomialIdeal J;
  std::vector<MarkedPoly> G;  // same order as J.basis()
};

/// The unique J-marked set spanning the same degree-r space as `forms`.
/// Throws DomainError when Delta_J vanishes.
ChartPoint chart_form(const std::vector<XPoly>& forms, const MonomialIdeal& J);

/// Leading monomials after Gaussian elimination; throws DomainError on dependent forms.
MonomialIdeal initial_monomials_gauss(const std::vector<XPoly>& forms, int n);

/// Seeded source of integer coordinate changes. Entries are uniform in [-bound, bound] using
/// rejection sampling on the raw 64-bit engine output, so draws are identical across platforms.
class CoordinateSampler {
 public:
  explicit CoordinateSampler(std::uint64_t seed) : engine_(seed) {}
  /// Draws until the matrix is invertible.
  CoordinateChange next(int n, long bound);
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

CoordinateChange random_coordinate_change(std::uint64_t seed, int n, long bound);
CoordinateChange identity_change(int n);
bool is_invertible(const CoordinateChange& g);

/// rank M(S_1 * I_r, r + 1) == q(r + 1).
bool in_hilb(const std::vector<XPoly>& forms, const ChartConstants& k);

/// Hilbert polynomial, Gotzmann data and the degree-r component of the saturation of an ideal
/// given by homogeneous generators.
struct IdealSummary {
  HilbertPoly hp;
  ChartConstants constants;
  int persistence_degree = 0;
  std::vector<XPoly> saturated_r;  // basis of (I^sat)_r
};

IdealSummary summarize_ideal(const std::vector<XPoly>& gens, int n);

struct OpenSetOptions {
  std::uint64_t seed = 0;
  long bound = 10;
  std::optional<CoordinateChange> g;  // fixed change of coordinates instead of random draws
  int max_tries = 100;
  bool all_charts = false;
  EnumerationOptions enumeration;
};

struct OpenSetResult {
  CoordinateChange g;
  MonomialIdeal J;     // chart ideal (J^sat)_{>=r}
  MonomialIdeal Jsat;
  int tried = 0;       // number of coordinate changes drawn
  std::vector<MonomialIdeal> charts;  // every chart containing I^g, when requested
  IdealSummary summary;
};

/// Every J in `candidates` (saturated Borel ideals) with Delta_{J_{>=r}}(I^g) != 0, in list order.
std::vector<MonomialIdeal> all_charts(const std::vector<XPoly>& saturated_r, const CoordinateChange& g,
                                      const std::vector<MonomialIdeal>& candidates, int r);

/// Finds g and a Borel chart of minimal saturated regularity containing I^g.
/// Throws ScaleCapError when max_tries draws all fail, DomainError when a fixed g fails.
OpenSetResult borel_open_set(const std::vector<XPoly>& gens, int n, const OpenSetOptions& opts = {});

}  // namespace borelcover
