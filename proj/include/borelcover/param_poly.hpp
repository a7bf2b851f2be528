#pragma once

#include "borelcover/rational.hpp"

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace borelcover {

/// Parameter variable C[head, tail]: 1-based head index into the canonical generator
/// order, 1-based tail index into the degrevlex-descending sous-escalier list.
struct CVar {
  int head = 0;
  int tail = 0;
  auto operator<=>(const CVar&) const = default;
};

/// Power product of C-variables, kept sorted by variable with positive exponents.
class CMonomial {
 public:
  CMonomial() = default;
  explicit CMonomial(CVar v, int exp = 1);
  explicit CMonomial(std::vector<std::pair<CVar, int>> factors);

  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<CVar, int>>& factors() const { return factors_; }
  int exponent(CVar v) const;

  CMonomial operator*(const CMonomial& other) const;
  bool divides(const CMonomial& other) const;
  CMonomial operator/(const CMonomial& divisor) const;
  CMonomial lcm(const CMonomial& other) const;
  /// Removes every occurrence of v.
  CMonomial without(CVar v) const;

  bool operator==(const CMonomial&) const = default;
  std::strong_ordering operator<=>(const CMonomial& other) const { return factors_ <=> other.factors_; }

 private:
  std::vector<std::pair<CVar, int>> factors_;
  int degree_ = 0;
};

using Assignment = std::map<CVar, Rational>;

/// Element of Q[C]; canonical sparse storage, so == is mathematical equality.
class ParamPoly {
 public:
  using Terms = std::map<CMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static ParamPoly variable(CVar v);
  static ParamPoly term(const CMonomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero when absent).
  Rational constant_term() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::set<CVar> variables() const;
  int degree_in(CVar v) const;

  void add_term(const CMonomial& m, const Rational& c);

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& c);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  ParamPoly mul_monomial(const CMonomial& m, const Rational& c) const;

  /// Throws DomainError if a variable is missing from the assignment.
  Rational evaluate(const Assignment& values) const;
  /// Replaces v by `value` everywhere.
  ParamPoly substitute(CVar v, const ParamPoly& value) const;

  bool operator==(const ParamPoly&) const = default;

 private:
  Terms terms_;
};

}  // namespace borelcover
