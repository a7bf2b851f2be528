#pragma once

#include "borelcover/monomial.hpp"

#include <unordered_set>
#include <vector>

namespace borelcover {

/// Monomial ideal represented by its minimal monomial basis B_J.
/// The basis is kept in canonical order: degree ascending, then degrevlex descending.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens` (drops multiples and duplicates) and sorts canonically.
  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

  int n() const { return n_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_unit() const { return !basis_.empty() && basis_.front().degree() == 0; }

  bool contains(const Monomial& m) const;
  bool is_generator(const Monomial& m) const { return lookup_.contains(m); }
  /// Index of a generator in the canonical basis order; -1 if absent.
  int generator_index(const Monomial& m) const;

  int min_degree() const;
  int max_degree() const;
  bool is_single_degree() const { return !basis_.empty() && min_degree() == max_degree(); }

  /// J_t and N(J)_t, both in descending degrevlex order.
  std::vector<Monomial> component(int t) const;
  std::vector<Monomial> sous_escalier(int t) const;

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  int n_ = 0;
  std::vector<Monomial> basis_;
  std::unordered_set<Monomial> lookup_;
};

/// Total order used to sort lists of ideals deterministically.
bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace borelcover
