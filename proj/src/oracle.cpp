#include "borelcover/oracle.hpp"

#include "borelcover/errors.hpp"

#include <algorithm>

namespace borelcover {

namespace {

int degrevlex_part(const CMonomial& a, const CMonomial& b, const std::set<CVar>* block, bool inside) {
  auto keep = [&](const CVar& v) { return !block || (block->contains(v) == inside); };
  int da = 0;
  int db = 0;
  for (const auto& [v, e] : a.factors()) {
    if (keep(v)) da += e;
  }
  for (const auto& [v, e] : b.factors()) {
    if (keep(v)) db += e;
  }
  if (da != db) return da < db ? -1 : 1;
  // Smallest variable = largest CVar; scan from the back of both factor lists.
  auto ia = a.factors().rbegin();
  auto ib = b.factors().rbegin();
  auto skip = [&](auto& it, auto end) {
    while (it != end && !keep(it->first)) ++it;
  };
  while (true) {
    skip(ia, a.factors().rend());
    skip(ib, b.factors().rend());
    const bool ea = ia == a.factors().rend();
    const bool eb = ib == b.factors().rend();
    if (ea && eb) return 0;
    if (ea) return 1;   // b has a smaller variable that a lacks
    if (eb) return -1;
    if (ia->first != ib->first) {
      // The monomial containing the smaller variable is the smaller one.
      return ia->first > ib->first ? -1 : 1;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
}

}  // namespace

int MonomialOrder::compare(const CMonomial& a, const CMonomial& b) const {
  if (block_.empty()) return degrevlex_part(a, b, nullptr, true);
  int c = degrevlex_part(a, b, &block_, true);
  if (c != 0) return c;
  return degrevlex_part(a, b, &block_, false);
}

namespace {

// Terms sorted by decreasing order; coefficients nonzero.
struct SPoly {
  std::vector<std::pair<CMonomial, Rational>> terms;
  bool zero() const { return terms.empty(); }
  const CMonomial& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
};

SPoly to_sorted(const ParamPoly& p, const MonomialOrder& ord) {
  SPoly s;
  s.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(s.terms.begin(), s.terms.end(),
            [&](const auto& x, const auto& y) { return ord.compare(x.first, y.first) > 0; });
  return s;
}

ParamPoly from_sorted(const SPoly& s) {
  ParamPoly p;
  for (const auto& [m, c] : s.terms) p.add_term(m, c);
  return p;
}

void make_monic(SPoly& s) {
  if (s.zero()) return;
  const Rational inv = 1 / s.lc();
  for (auto& t : s.terms) t.second *= inv;
}

// a - c * m * b
SPoly sub_mul(const SPoly& a, const Rational& c, const CMonomial& m, const SPoly& b, const MonomialOrder& ord) {
  SPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    CMonomial bm = b.terms[j].first * m;
    int cmp = i == a.terms.size() ? -1 : ord.compare(a.terms[i].first, bm);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.emplace_back(std::move(bm), -c * b.terms[j].second);
      ++j;
    } else {
      Rational v = a.terms[i].second - c * b.terms[j].second;
      if (sgn(v) != 0) out.terms.emplace_back(a.terms[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f modulo monic polynomials g.
SPoly reduce_full(SPoly f, const std::vector<SPoly>& g, const MonomialOrder& ord) {
  SPoly done;
  while (!f.zero()) {
    bool reduced = false;
    for (const auto& h : g) {
      if (h.zero() || !h.lm().divides(f.lm())) continue;
      f = sub_mul(f, f.lc(), f.lm() / h.lm(), h, ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      done.terms.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
    }
  }
  return done;
}

SPoly s_polynomial(const SPoly& a, const SPoly& b, const MonomialOrder& ord) {
  const CMonomial l = a.lm().lcm(b.lm());
  SPoly first = sub_mul(SPoly{}, Rational(-1), l / a.lm(), a, ord);
  return sub_mul(first, Rational(1), l / b.lm(), b, ord);
}

bool coprime(const CMonomial& a, const CMonomial& b) { return a.lcm(b).degree() == a.degree() + b.degree(); }

}  // namespace

std::vector<ParamPoly> groebner_basis(const std::vector<ParamPoly>& gens, const MonomialOrder& ord,
                                      const GroebnerOptions& opts) {
  std::vector<SPoly> basis;
  for (const auto& g : gens) {
    SPoly s = reduce_full(to_sorted(g, ord), basis, ord);
    make_monic(s);
    if (!s.zero()) basis.push_back(std::move(s));
  }
  struct Pair {
    std::size_t i, j;
    CMonomial lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, basis[i].lm().lcm(basis[j].lm())});
  }
  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > opts.max_pairs) throw ScaleCapError("Groebner basis exceeded the pair cap");
    // Normal strategy: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const Pair& x, const Pair& y) { return ord.compare(x.lcm, y.lcm) < 0; });
    Pair p = *it;
    pairs.erase(it);
    if (coprime(basis[p.i].lm(), basis[p.j].lm())) continue;
    SPoly s = reduce_full(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord);
    if (s.zero()) continue;
    make_monic(s);
    if (basis.size() >= opts.max_basis) throw ScaleCapError("Groebner basis exceeded the size cap");
    basis.push_back(std::move(s));
    const std::size_t j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, basis[i].lm().lcm(basis[j].lm())});
  }
  // Minimalize and interreduce.
  std::vector<SPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm().divides(basis[i].lm()) && (!(basis[j].lm() == basis[i].lm()) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<SPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    SPoly head{{minimal[i].terms.front()}};
    SPoly tail{{minimal[i].terms.begin() + 1, minimal[i].terms.end()}};
    SPoly t = reduce_full(tail, others, ord);
    head.terms.insert(head.terms.end(), t.terms.begin(), t.terms.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const SPoly& a, const SPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  std::vector<ParamPoly> out;
  for (const auto& s : reduced) out.push_back(from_sorted(s));
  return out;
}

ParamPoly normal_form(const ParamPoly& f, const std::vector<ParamPoly>& basis, const MonomialOrder& ord) {
  std::vector<SPoly> g;
  for (const auto& b : basis) {
    SPoly s = to_sorted(b, ord);
    make_monic(s);
    g.push_back(std::move(s));
  }
  return from_sorted(reduce_full(to_sorted(f, ord), g, ord));
}

bool ideal_equal(const std::vector<ParamPoly>& a, const std::vector<ParamPoly>& b, const MonomialOrder& ord,
                 const GroebnerOptions& opts) {
  const auto ga = groebner_basis(a, ord, opts);
  const auto gb = groebner_basis(b, ord, opts);
  for (const auto& f : a) {
    if (!normal_form(f, gb, ord).is_zero()) return false;
  }
  for (const auto& f : b) {
    if (!normal_form(f, ga, ord).is_zero()) return false;
  }
  return true;
}

LinearElimination greedy_linear_eliminate(const std::vector<ParamPoly>& gens) {
  LinearElimination out;
  for (const auto& g : gens) {
    if (!g.is_zero()) out.residual.push_back(g);
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < out.residual.size() && !progress; ++k) {
      const ParamPoly& g = out.residual[k];
      for (const CVar& v : g.variables()) {
        const CMonomial lin(v);
        int occurrences = 0;
        for (const auto& [m, c] : g.terms()) {
          if (m.exponent(v) > 0) ++occurrences;
        }
        auto it = g.terms().find(lin);
        if (occurrences != 1 || it == g.terms().end()) continue;
        // g = c v + rest  =>  v = -rest / c
        const Rational c = it->second;
        ParamPoly rest = g - ParamPoly::term(lin, c);
        ParamPoly value = rest * (Rational(-1) / c);
        std::vector<ParamPoly> next;
        for (std::size_t j = 0; j < out.residual.size(); ++j) {
          if (j == k) continue;
          ParamPoly h = out.residual[j].substitute(v, value);
          if (!h.is_zero()) next.push_back(std::move(h));
        }
        out.residual = std::move(next);
        out.eliminated.push_back(v);
        progress = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace borelcover
