#include "borelcover/monomial_ideal.hpp"

#include "borelcover/errors.hpp"

#include <algorithm>

namespace borelcover {

namespace {

bool canonical_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return degrevlex_cmp(a, b) > 0;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  if (n < 0) throw DomainError("ambient dimension must be non-negative");
  for (const auto& g : gens) {
    if (g.n() != n) throw DomainError("generator lives in a different ambient ring");
  }
  std::sort(gens.begin(), gens.end(), canonical_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so any divisor of g appears before g.
  for (const auto& g : gens) {
    bool redundant = std::any_of(basis_.begin(), basis_.end(),
                                 [&](const Monomial& b) { return b.divides(g); });
    if (!redundant) basis_.push_back(g);
  }
  lookup_.insert(basis_.begin(), basis_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.n() != n_) throw DomainError("monomial lives in a different ambient ring");
  for (const auto& b : basis_) {
    if (b.degree() > m.degree()) break;
    if (b.divides(m)) return true;
  }
  return false;
}

int MonomialIdeal::generator_index(const Monomial& m) const {
  auto it = std::find(basis_.begin(), basis_.end(), m);
  return it == basis_.end() ? -1 : static_cast<int>(it - basis_.begin());
}

int MonomialIdeal::min_degree() const {
  if (basis_.empty()) throw DomainError("zero ideal has no generators");
  return basis_.front().degree();
}

int MonomialIdeal::max_degree() const {
  if (basis_.empty()) throw DomainError("zero ideal has no generators");
  return basis_.back().degree();
}

std::vector<Monomial> MonomialIdeal::component(int t) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n_, t)) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> MonomialIdeal::sous_escalier(int t) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n_, t)) {
    if (!contains(m)) out.push_back(m);
  }
  return out;
}

bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  const auto& x = a.basis();
  const auto& y = b.basis();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] == y[i]) continue;
    return canonical_before(x[i], y[i]);
  }
  return x.size() < y.size();
}

}  // namespace borelcover
