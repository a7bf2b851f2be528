#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace borelcover {

/// Monomial x_0^{e_0} ... x_n^{e_n} in the ring K[x_0, ..., x_n], with x_0 < x_1 < ... < x_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  static Monomial one(int n);
  static Monomial variable(int n, int i);

  /// Index of the largest variable, i.e. the ambient P^n.
  int n() const { return static_cast<int>(exps_.size()) - 1; }
  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// Index of min(x^a) / max(x^a); the monomial must have positive degree.
  int min_var() const;
  int max_var() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws DomainError if `divisor` does not divide *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial times_var(int i) const;
  /// Divides by x_i; throws DomainError if x_i does not divide.
  Monomial div_var(int i) const;
  Monomial lcm(const Monomial& other) const;
  /// Sets the exponent of x_i to zero (dehomogenization x_i := 1).
  Monomial drop_var(int i) const;

  bool operator==(const Monomial&) const = default;
  /// Lexicographic on the raw exponent vector; storage order only, not a term order.
  std::strong_ordering operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }

  std::size_t hash() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Degree-first, then reverse lexicographic with x_n > ... > x_0.
/// Throws DomainError on mismatched ambient dimension.
std::strong_ordering degrevlex_cmp(const Monomial& a, const Monomial& b);

struct DegrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_cmp(a, b) > 0; }
};

/// All monomials of degree d in n+1 variables, in descending degrevlex order.
const std::vector<Monomial>& monomials_of_degree(int n, int d);

/// Number of monomials of degree d in n+1 variables, C(n+d, n).
long count_monomials(int n, int d);

/// One increasing elementary move e+_{i,j}: x_i -> x_j with i < j.
std::vector<Monomial> increasing_moves(const Monomial& a);
std::vector<Monomial> decreasing_moves(const Monomial& a);

}  // namespace borelcover

template <>
struct std::hash<borelcover::Monomial> {
  std::size_t operator()(const borelcover::Monomial& m) const noexcept { return m.hash(); }
};
