#pragma once

#include "borelcover/errors.hpp"
#include "borelcover/monomial.hpp"
#include "borelcover/param_poly.hpp"
#include "borelcover/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace borelcover {

namespace detail {
inline bool is_zero_coeff(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero_coeff(const ParamPoly& c) { return c.is_zero(); }
}  // namespace detail

/// Sparse polynomial in x_0..x_n with coefficients in Q or Q[C].
/// Terms are kept in descending degrevlex order; zero coefficients are never stored.
template <class Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff, DegrevlexGreater>;

  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  static Poly monomial(const Monomial& m, const Coeff& c = Coeff(1)) {
    Poly p(m.n());
    p.add_term(m, c);
    return p;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Common degree of the support; nullopt for zero; throws DomainError if inhomogeneous.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) throw DomainError("polynomial is not homogeneous");
    }
    return d;
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.n() != n_) throw DomainError("monomial lives in a different ambient ring");
    if (detail::is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  void erase(const Monomial& m) { terms_.erase(m); }

  Poly& operator+=(const Poly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly scaled(const Coeff& s) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }
  Poly shifted(const Monomial& x) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * x, c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }

  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check_ring(const Poly& o) const {
    if (o.n_ != n_) throw DomainError("polynomials live in different ambient rings");
  }

  int n_ = 0;
  Terms terms_;
};

/// Polynomial in x with rational coefficients.
using XPoly = Poly<Rational>;
/// Polynomial in x with coefficients in Q[C] (template polynomials F_alpha and their combinations).
using ParamXPoly = Poly<ParamPoly>;

/// (n+1) x (n+1) matrix acting by x_i -> sum_j g[i][j] x_j.
using CoordinateChange = std::vector<std::vector<Rational>>;

/// f^g; throws DomainError if g is singular or has the wrong shape.
XPoly apply_change_of_coords(const XPoly& f, const CoordinateChange& g);

/// Coefficient-wise evaluation of the C-variables.
XPoly specialize(const ParamXPoly& f, const Assignment& values);

/// Lifts a rational polynomial into Q[C][x].
ParamXPoly lift(const XPoly& f);

}  // namespace borelcover
