#include "borelcover/monomial.hpp"

#include "borelcover/errors.hpp"
#include "borelcover/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace borelcover {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw DomainError("monomial needs at least one variable");
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n + 1), 0)); }

Monomial Monomial::variable(int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return Monomial(std::move(e));
}

int Monomial::min_var() const {
  for (int i = 0; i < num_vars(); ++i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  }
  throw DomainError("min(x^a) is undefined for the monomial 1");
}

int Monomial::max_var() const {
  for (int i = n(); i >= 0; --i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  }
  throw DomainError("max(x^a) is undefined for the monomial 1");
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size() || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw DomainError("monomials in different rings");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial division is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::times_var(int i) const {
  Monomial r = *this;
  ++r.exps_.at(static_cast<std::size_t>(i));
  ++r.degree_;
  return r;
}

Monomial Monomial::div_var(int i) const {
  Monomial r = *this;
  auto& e = r.exps_.at(static_cast<std::size_t>(i));
  if (e == 0) throw DomainError("variable does not divide monomial");
  --e;
  --r.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw DomainError("monomials in different rings");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::drop_var(int i) const {
  Monomial r = *this;
  auto& e = r.exps_.at(static_cast<std::size_t>(i));
  r.degree_ -= e;
  e = 0;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : exps_) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

std::strong_ordering degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw DomainError("degrevlex_cmp: mismatched ambient dimension");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void fill_monomials(int n, int d, int var, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == n) {
    exps[static_cast<std::size_t>(n)] = d;
    out.emplace_back(exps);
    return;
  }
  for (int e = d; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    fill_monomials(n, d - e, var + 1, exps, out);
  }
}

}  // namespace

const std::vector<Monomial>& monomials_of_degree(int n, int d) {
  if (n < 0 || d < 0) throw DomainError("monomials_of_degree: negative argument");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Monomial>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n + 1), 0);
    fill_monomials(n, d, 0, exps, out);
    std::sort(out.begin(), out.end(), DegrevlexGreater{});
    slot = std::make_unique<const std::vector<Monomial>>(std::move(out));
  }
  return *slot;
}

long count_monomials(int n, int d) {
  if (d < 0) return 0;
  return binomial(n + d, n).get_si();
}

std::vector<Monomial> increasing_moves(const Monomial& a) {
  std::vector<Monomial> out;
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a[i] == 0) continue;
    for (int j = i + 1; j < a.num_vars(); ++j) out.push_back(a.div_var(i).times_var(j));
  }
  return out;
}

std::vector<Monomial> decreasing_moves(const Monomial& a) {
  std::vector<Monomial> out;
  for (int j = 0; j < a.num_vars(); ++j) {
    if (a[j] == 0) continue;
    for (int i = 0; i < j; ++i) out.push_back(a.div_var(j).times_var(i));
  }
  return out;
}

}  // namespace borelcover
