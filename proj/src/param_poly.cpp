#include "borelcover/param_poly.hpp"

#include "borelcover/errors.hpp"
#include "borelcover/text.hpp"

#include <algorithm>

namespace borelcover {

CMonomial::CMonomial(CVar v, int exp) {
  if (exp < 0) throw DomainError("negative exponent");
  if (exp > 0) {
    factors_.emplace_back(v, exp);
    degree_ = exp;
  }
}

CMonomial::CMonomial(std::vector<std::pair<CVar, int>> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e < 0) throw DomainError("negative exponent");
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

int CMonomial::exponent(CVar v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, CVar key) { return f.first < key; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

CMonomial CMonomial::operator*(const CMonomial& other) const {
  CMonomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool CMonomial::divides(const CMonomial& other) const {
  if (degree_ > other.degree_) return false;
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  return true;
}

CMonomial CMonomial::operator/(const CMonomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("parameter monomial division is not exact");
  std::vector<std::pair<CVar, int>> out;
  for (const auto& [v, e] : factors_) {
    int left = e - divisor.exponent(v);
    if (left > 0) out.emplace_back(v, left);
  }
  return CMonomial(std::move(out));
}

CMonomial CMonomial::lcm(const CMonomial& other) const {
  std::vector<std::pair<CVar, int>> out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      out.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return CMonomial(std::move(out));
}

CMonomial CMonomial::without(CVar v) const {
  std::vector<std::pair<CVar, int>> out;
  for (const auto& f : factors_) {
    if (f.first != v) out.push_back(f);
  }
  return CMonomial(std::move(out));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(CMonomial(), c);
}

ParamPoly ParamPoly::variable(CVar v) { return term(CMonomial(v), 1); }

ParamPoly ParamPoly::term(const CMonomial& m, const Rational& c) {
  ParamPoly p;
  p.add_term(m, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(CMonomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<CVar> ParamPoly::variables() const {
  std::set<CVar> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) out.insert(v);
  }
  return out;
}

int ParamPoly::degree_in(CVar v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

void ParamPoly::add_term(const CMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

ParamPoly ParamPoly::mul_monomial(const CMonomial& m, const Rational& c) const {
  ParamPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [mt, ct] : terms_) r.terms_.emplace(mt * m, ct * c);
  return r;
}

Rational ParamPoly::evaluate(const Assignment& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw DomainError("no value assigned to " + to_string(v));
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

ParamPoly ParamPoly::substitute(CVar v, const ParamPoly& value) const {
  ParamPoly out;
  std::vector<ParamPoly> powers{ParamPoly(1)};
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    out += powers[static_cast<std::size_t>(e)].mul_monomial(m.without(v), c);
  }
  return out;
}

}  // namespace borelcover
