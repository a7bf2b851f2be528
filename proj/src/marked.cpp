#include "borelcover/marked.hpp"

#include "borelcover/errors.hpp"
#include "borelcover/text.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace borelcover {

std::vector<CVar> MarkedTemplate::variables() const {
  std::vector<CVar> out;
  for (std::size_t i = 0; i < tails.size(); ++i) {
    for (std::size_t j = 0; j < tails[i].size(); ++j) {
      out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    }
  }
  return out;
}

int min_template_degree(const MonomialIdeal& Jsat) { return std::max(rho(Jsat) - 1, 0); }

MarkedTemplate marked_template(const MonomialIdeal& Jsat, int m) {
  if (m < 0) throw DomainError("truncation degree must be non-negative");
  if (!(saturate(Jsat) == Jsat)) throw DomainError("expected a saturated Borel ideal");
  const int low = min_template_degree(Jsat);
  if (m < low && !(truncate(Jsat, m) == truncate(Jsat, low))) {
    throw DomainError("truncation degree " + std::to_string(m) + " is below rho - 1 = " + std::to_string(low) +
                      " and the truncation differs from the one at rho - 1");
  }
  MarkedTemplate T;
  T.n = Jsat.n();
  T.m = m;
  T.Jsat = Jsat;
  T.J = truncate(Jsat, m);
  T.hp = hilbert_polynomial(Jsat);
  const auto& heads = T.J.basis();
  for (std::size_t i = 0; i < heads.size(); ++i) {
    auto tail = T.J.sous_escalier(heads[i].degree());
    ParamXPoly f = ParamXPoly::monomial(heads[i], ParamPoly(1));
    for (std::size_t j = 0; j < tail.size(); ++j) {
      CVar v{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      f.add_term(tail[j], -ParamPoly::variable(v));
    }
    T.num_vars += static_cast<long>(tail.size());
    T.tails.push_back(std::move(tail));
    T.F.push_back(std::move(f));
  }
  return T;
}

std::vector<SPair> ek_spairs(const MonomialIdeal& J) {
  if (!is_strongly_stable(J)) throw DomainError("Eliahou-Kervaire pairs need a Borel ideal");
  std::vector<SPair> out;
  const auto& B = J.basis();
  for (std::size_t a = 0; a < B.size(); ++a) {
    if (B[a].degree() == 0) continue;
    for (int j = B[a].min_var() + 1; j <= J.n(); ++j) {
      StarDecomposition sd = star_decompose(B[a].times_var(j), J);
      out.push_back({static_cast<int>(a), j, J.generator_index(sd.alpha), std::move(sd.eta)});
    }
  }
  return out;
}

ParamXPoly spair_polynomial(const SPair& pair, const MarkedTemplate& T) {
  const auto& fa = T.F[static_cast<std::size_t>(pair.alpha)];
  const auto& fb = T.F[static_cast<std::size_t>(pair.beta)];
  return fa.shifted(Monomial::variable(T.n, pair.var)) - fb.shifted(pair.eta);
}

ParamXPoly reduce(const ParamXPoly& h_in, const MarkedTemplate& T, const ReduceOptions& opts, ReduceStats* stats) {
  ParamXPoly h = h_in;
  if (h.is_zero()) return h;
  const int deg = *h.homogeneous_degree();
  long cap = opts.step_cap;
  if (cap <= 0) cap = 10L * (std::max(T.hp.degree(), 0) + 2) * count_monomials(T.n, deg);
  std::unordered_map<Monomial, int> depth;
  ReduceStats local;

  while (true) {
    const Monomial* target = nullptr;
    if (opts.selection == Selection::LargestFirst) {
      for (auto it = h.terms().begin(); it != h.terms().end(); ++it) {
        if (T.J.contains(it->first)) {
          target = &it->first;
          break;
        }
      }
    } else {
      for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
        if (T.J.contains(it->first)) {
          target = &it->first;
          break;
        }
      }
    }
    if (!target) break;
    if (++local.steps > cap) {
      throw Error("reduction exceeded its step cap of " + std::to_string(cap) + "; the template precondition is violated");
    }
    const Monomial delta = *target;
    const ParamPoly c = h.coefficient(delta);
    const int level = depth.contains(delta) ? depth[delta] : 0;
    local.longest_chain = std::max(local.longest_chain, level + 1);
    StarDecomposition sd = star_decompose(delta, T.J);
    const auto& fb = T.F[static_cast<std::size_t>(T.J.generator_index(sd.alpha))];
    h.erase(delta);
    for (const auto& [mono, coeff] : fb.terms()) {
      if (mono == sd.alpha) continue;
      Monomial prod = mono * sd.eta;
      h.add_term(prod, -(c * coeff));
      int& d = depth[prod];
      d = std::max(d, level + 1);
    }
  }
  if (stats) {
    stats->steps += local.steps;
    stats->longest_chain = std::max(stats->longest_chain, local.longest_chain);
  }
  return h;
}

namespace {

// Representative used to detect generators equal up to a nonzero scalar.
std::string scalar_class(const ParamPoly& p) {
  ParamPoly q = p * (Rational(1) / p.terms().begin()->second);
  return to_string(q);
}

}  // namespace

SchemeIdeal scheme_equations(const MonomialIdeal& Jsat, int m, const SchemeOptions& opts) {
  SchemeIdeal out;
  out.T = marked_template(Jsat, m);
  const auto pairs = ek_spairs(out.T.J);
  out.spairs = static_cast<long>(pairs.size());

  std::vector<ParamXPoly> reduced(pairs.size());
  std::vector<ReduceStats> stats(pairs.size());
  auto work = [&](std::size_t k) {
    reduced[k] = reduce(spair_polynomial(pairs[k], out.T), out.T, opts.reduce, &stats[k]);
  };
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(pairs.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < pairs.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < pairs.size(); k = next++) {
          try {
            work(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::set<std::string> seen;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out.longest_chain = std::max(out.longest_chain, stats[k].longest_chain);
    for (const auto& [mono, coeff] : reduced[k].terms()) {
      if (coeff.is_zero() || !seen.insert(scalar_class(coeff)).second) continue;
      out.max_degree = std::max(out.max_degree, coeff.degree());
      out.generators.push_back(coeff);
    }
  }
  return out;
}

std::vector<MarkedPoly> specialize_template(const MarkedTemplate& T, const Assignment& values) {
  std::vector<MarkedPoly> out;
  for (std::size_t i = 0; i < T.F.size(); ++i) out.push_back({T.heads()[i], specialize(T.F[i], values)});
  return out;
}

bool is_marked_basis(const std::vector<MarkedPoly>& G, const MonomialIdeal& J, int r) {
  if (G.size() != J.size()) throw DomainError("marked set size differs from |B_J|");
  std::set<Monomial> heads;
  for (const auto& g : G) {
    if (!J.is_generator(g.head)) throw DomainError("head " + to_string(g.head) + " is not a generator");
    if (!heads.insert(g.head).second) throw DomainError("repeated head " + to_string(g.head));
    if (g.poly.coefficient(g.head) != 1) throw DomainError("head coefficient must be 1");
    for (const auto& [mono, c] : g.poly.terms()) {
      if (mono.degree() != g.head.degree()) throw DomainError("marked polynomial is not homogeneous");
      if (mono != g.head && J.contains(mono)) throw DomainError("tail monomial " + to_string(mono) + " lies in J");
    }
  }
  if (J.is_zero()) return true;
  std::vector<XPoly> polys;
  for (const auto& g : G) polys.push_back(g.poly);
  const int m = J.min_degree();
  for (int t = m; t <= std::max(r, m) + 1; ++t) {
    const long expected = count_monomials(J.n(), t) - hilbert_function(J, t);
    if (component_dimension(polys, J.n(), t) != expected) return false;
  }
  return true;
}

long embedding_dimension(const MonomialIdeal& Jsat, int m) { return marked_template(Jsat, m).num_vars; }

EquationBounds equation_bounds(const MonomialIdeal& Jsat, int m) {
  const int reg = regularity(Jsat);
  if (m < reg) {
    throw DomainError("degree bounds need m >= reg(J^sat) = " + std::to_string(reg));
  }
  const HilbertPoly p = hilbert_polynomial(Jsat);
  const int n = Jsat.n();
  auto q = [&](long t) -> Integer { return Integer(ambient_dimension(n, t)) - p(t); };
  EquationBounds b;
  b.max_count = (q(m) * (n + 1) - q(m + 1)) * p(m + 1);
  b.max_degree = std::max(p.degree(), 0) + 2;
  return b;
}

Integer naive_minor_count(int n, const HilbertPoly& p) {
  const ChartConstants k = chart_constants(p, n);
  const long order = k.s_next + 1;
  return binomial((n + 1) * k.s, order) * binomial(ambient_dimension(n, k.r + 1), order);
}

}  // namespace borelcover
