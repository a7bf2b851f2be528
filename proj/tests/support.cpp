#include "support.hpp"

#include "borelcover/linalg.hpp"

#include <algorithm>
#include <functional>

namespace testing {

Rational Rng::rational(long bound) {
  Rational q(integer(-bound, bound), integer(1, 3));
  q.canonicalize();
  return q;
}

Monomial Rng::monomial(int n, int degree) {
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(integer(0, n))];
  return Monomial(e);
}

XPoly Rng::form(int n, int degree, int terms, long bound) {
  XPoly f(n);
  for (int k = 0; k < terms; ++k) f.add_term(monomial(n, degree), rational(bound));
  return f;
}

CoordinateChange Rng::invertible(int n, long bound) {
  while (true) {
    CoordinateChange g(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    for (auto& row : g) {
      for (auto& x : row) x = integer(-bound, bound);
    }
    if (is_invertible(g)) return g;
  }
}

bool borel_leq_partial_sums(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return false;
  long sa = 0;
  long sb = 0;
  for (int k = a.n(); k >= 0; --k) {
    sa += a[k];
    sb += b[k];
    if (sb < sa) return false;
  }
  return true;
}

std::set<std::vector<Monomial>> brute_force_borel_sets(int n, int r, int s) {
  // Monomials listed independently of the library's degrevlex enumeration.
  std::vector<Monomial> monos;
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      e[static_cast<std::size_t>(i)] = left;
      monos.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, r);
  const int N = static_cast<int>(monos.size());
  std::set<std::vector<Monomial>> out;
  std::vector<int> pick(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (s > N) return out;
  while (true) {
    std::set<Monomial> chosen;
    for (int i : pick) chosen.insert(monos[static_cast<std::size_t>(i)]);
    bool closed = true;
    for (const auto& m : chosen) {
      for (int j = 0; j <= n && closed; ++j) {
        if (m[j] == 0) continue;
        for (int i = j + 1; i <= n; ++i) {
          if (!chosen.contains(m.div_var(j).times_var(i))) {
            closed = false;
            break;
          }
        }
      }
      if (!closed) break;
    }
    if (closed) {
      std::vector<Monomial> v(chosen.begin(), chosen.end());
      out.insert(v);
    }
    int k = s - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == N - s + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < s; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

long count_outside(const MonomialIdeal& J, int t) {
  long count = 0;
  for (const auto& m : monomials_of_degree(J.n(), t)) {
    bool inside = false;
    for (const auto& b : J.basis()) {
      bool div = true;
      for (int i = 0; i <= J.n(); ++i) div = div && b[i] <= m[i];
      inside = inside || div;
    }
    if (!inside) ++count;
  }
  return count;
}

Rational evaluate(const XPoly& f, const std::vector<long>& point) {
  Rational acc = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c;
    for (int i = 0; i <= m.n(); ++i) {
      for (int k = 0; k < m[i]; ++k) v *= point[static_cast<std::size_t>(i)];
    }
    acc += v;
  }
  return acc;
}

std::vector<XPoly> vanishing_forms(int n, int t, const std::vector<std::vector<long>>& points) {
  const auto& monos = monomials_of_degree(n, t);
  Matrix ev(points.size(), monos.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t c = 0; c < monos.size(); ++c) ev(p, c) = evaluate(XPoly::monomial(monos[c]), points[p]);
  }
  std::vector<XPoly> out;
  for (const auto& v : kernel(ev)) {
    XPoly f(n);
    for (std::size_t c = 0; c < monos.size(); ++c) f.add_term(monos[c], v[c]);
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<Assignment> point_configuration(const MarkedTemplate& T, Rng& rng, long bound) {
  const long npoints = T.hp.at(0);
  std::vector<std::vector<long>> points;
  for (long k = 0; k < npoints; ++k) {
    std::vector<long> p(static_cast<std::size_t>(T.n) + 1);
    for (auto& x : p) x = rng.integer(-bound, bound);
    p[0] = rng.integer(1, bound);
    points.push_back(std::move(p));
  }
  Assignment a;
  std::set<int> degrees;
  for (const auto& h : T.heads()) degrees.insert(h.degree());
  for (int t : degrees) {
    auto forms = vanishing_forms(T.n, t, points);
    const auto& monos = monomials_of_degree(T.n, t);
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (T.J.contains(monos[c])) cols.push_back(c);
    }
    if (forms.size() != cols.size()) return std::nullopt;  // points not in general position
    Echelon e = rref_on_columns(coefficient_matrix(forms, T.n, t), cols);
    if (e.pivots.size() != cols.size()) return std::nullopt;
    for (std::size_t i = 0; i < T.heads().size(); ++i) {
      const Monomial& h = T.heads()[i];
      if (h.degree() != t) continue;
      const std::size_t row = static_cast<std::size_t>(std::find(cols.begin(), cols.end(),
                                  static_cast<std::size_t>(std::find(monos.begin(), monos.end(), h) - monos.begin())) -
                                                       cols.begin());
      for (std::size_t j = 0; j < T.tails[i].size(); ++j) {
        const std::size_t c = static_cast<std::size_t>(std::find(monos.begin(), monos.end(), T.tails[i][j]) - monos.begin());
        a[CVar{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] = -e.reduced(row, c);
      }
    }
  }
  return a;
}

std::optional<Assignment> lifted_configuration(const MarkedTemplate& low, const MarkedTemplate& high, Rng& rng,
                                               long bound) {
  std::vector<XPoly> gens;
  for (const auto& mp : specialize_template(low, random_assignment(low, rng, bound))) gens.push_back(mp.poly);
  Assignment a;
  std::set<int> degrees;
  for (const auto& h : high.heads()) degrees.insert(h.degree());
  for (int t : degrees) {
    const Echelon e = ideal_component(gens, high.n, t);
    const auto forms = forms_from_rows(e.reduced, high.n, t);
    const MonomialIdeal Jt(high.n, high.J.component(t));
    if (forms.size() != Jt.size() || sgn(pluecker_coordinate(forms, Jt)) == 0) return std::nullopt;
    const ChartPoint pt = chart_form(forms, Jt);
    for (const auto& mp : pt.G) {
      const int i = high.J.generator_index(mp.head);
      if (i < 0) continue;
      const auto& tails = high.tails[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < tails.size(); ++j) {
        a[CVar{i + 1, static_cast<int>(j) + 1}] = -mp.poly.coefficient(tails[j]);
      }
    }
  }
  return a;
}

Assignment random_assignment(const MarkedTemplate& T, Rng& rng, long bound) {
  Assignment a;
  for (const auto& v : T.variables()) a[v] = rng.rational(bound);
  return a;
}

bool vanishes(const std::vector<ParamPoly>& gens, const Assignment& a) {
  return std::all_of(gens.begin(), gens.end(), [&](const ParamPoly& g) { return sgn(g.evaluate(a)) == 0; });
}

}  // namespace testing
