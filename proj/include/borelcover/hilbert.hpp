#pragma once

#include "borelcover/monomial_ideal.hpp"
#include "borelcover/rational.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace borelcover {

/// Integer-valued polynomial in t stored by its integer coordinates in the basis C(t+k, k).
class HilbertPoly {
 public:
  HilbertPoly() = default;
  static HilbertPoly from_binomial_coords(std::vector<Integer> coords);
  /// Monomial-basis coefficients, constant first; throws DomainError if not integer valued.
  static HilbertPoly from_coefficients(const std::vector<Rational>& coeffs);
  /// Parses expressions like `3*t`, `2*t+3`, `7t-5`, `t^2+1`.
  static HilbertPoly parse(std::string_view text);

  const std::vector<Integer>& binomial_coords() const { return coords_; }
  std::vector<Rational> coefficients() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coords_.size()) - 1; }
  bool is_zero() const { return coords_.empty(); }
  Integer operator()(long t) const;
  long at(long t) const;
  std::string to_string() const;

  bool operator==(const HilbertPoly&) const = default;

 private:
  std::vector<Integer> coords_;
};

/// |N(J)_t|, the Hilbert function of S/J in degree t.
long hilbert_function(const MonomialIdeal& J, int t);

/// Hilbert polynomial of S/J. Borel ideals are interpolated at reg(J)..reg(J)+n and checked at
/// one more point; other monomial ideals go through hilbert_polynomial_by_persistence.
HilbertPoly hilbert_polynomial(const MonomialIdeal& J);

/// Macaulay representation h = sum_i C(k_i, i), i = t, t-1, ..., listed as (k_i, i).
std::vector<std::pair<long, long>> macaulay_representation(long h, long t);
/// Maximal growth bound h^<t>.
long macaulay_growth(long h, long t);

/// Finds the first degree t >= start at which h(t+1) = h(t)^<t> (Gotzmann persistence, valid
/// when the ideal is generated in degrees <= start) and returns the Hilbert polynomial together
/// with that degree. Throws ScaleCapError after `max_degree`.
struct PersistenceResult {
  HilbertPoly polynomial;
  int degree = 0;
};
PersistenceResult hilbert_polynomial_by_persistence(const std::function<long(int)>& hf, int start,
                                                    int max_degree = 200);

/// The exponents a_1 >= ... >= a_r of p(t) = sum_i C(t + a_i - i + 1, a_i).
/// Throws DomainError if p is not admissible in P^n.
std::vector<int> gotzmann_representation(const HilbertPoly& p, int n);
int gotzmann_number(const HilbertPoly& p, int n);

/// N(t) = C(n+t, n); q(t) = N(t) - p(t).
long ambient_dimension(int n, long t);

struct ChartConstants {
  int n = 0;
  HilbertPoly p;
  int r = 0;        // Gotzmann number
  long N_r = 0;     // N(r)
  long s = 0;       // q(r)
  long s_next = 0;  // q(r+1)
  long D = 0;       // p(r) q(r), dimension of the Grassmannian

  long q(long t) const { return ambient_dimension(n, t) - p.at(t); }
};

ChartConstants chart_constants(const HilbertPoly& p, int n);

}  // namespace borelcover
