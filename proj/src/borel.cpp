#include "borelcover/borel.hpp"

#include "borelcover/errors.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace borelcover {

bool is_strongly_stable(const MonomialIdeal& J) {
  for (const auto& b : J.basis()) {
    for (const auto& up : increasing_moves(b)) {
      if (!J.contains(up)) return false;
    }
  }
  return true;
}

bool borel_leq(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw DomainError("monomials live in different ambient rings");
  if (a.degree() != b.degree()) throw DomainError("borel_leq needs monomials of equal degree");
  if (a == b) return true;
  std::unordered_set<Monomial> seen{a};
  std::deque<Monomial> queue{a};
  while (!queue.empty()) {
    Monomial cur = queue.front();
    queue.pop_front();
    for (auto& up : increasing_moves(cur)) {
      if (up == b) return true;
      // Moves only go up in degrevlex, so anything already below b can be pruned.
      if (degrevlex_cmp(up, b) > 0) continue;
      if (seen.insert(up).second) queue.push_back(std::move(up));
    }
  }
  return false;
}

MonomialIdeal saturate(const MonomialIdeal& J) {
  if (!is_strongly_stable(J)) throw DomainError("saturate needs a strongly stable ideal");
  std::vector<Monomial> gens;
  gens.reserve(J.size());
  for (const auto& b : J.basis()) gens.push_back(b.drop_var(0));
  return MonomialIdeal(J.n(), std::move(gens));
}

namespace {

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) gens.push_back(x.lcm(y));
  }
  return MonomialIdeal(a.n(), std::move(gens));
}

}  // namespace

MonomialIdeal saturate_general(const MonomialIdeal& J) {
  if (J.is_zero()) return J;
  std::optional<MonomialIdeal> acc;
  for (int j = 0; j <= J.n(); ++j) {
    std::vector<Monomial> gens;
    for (const auto& b : J.basis()) gens.push_back(b.drop_var(j));
    MonomialIdeal colon(J.n(), std::move(gens));
    acc = acc ? intersect(*acc, colon) : colon;
  }
  return *acc;
}

int regularity(const MonomialIdeal& J) {
  if (!is_strongly_stable(J)) throw DomainError("regularity is only read off the basis for Borel ideals");
  return J.is_zero() ? 0 : J.max_degree();
}

MonomialIdeal truncate(const MonomialIdeal& J, int m) {
  if (m < 0) throw DomainError("truncation degree must be non-negative");
  std::vector<Monomial> gens = J.is_zero() ? std::vector<Monomial>{} : J.component(m);
  for (const auto& b : J.basis()) {
    if (b.degree() > m) gens.push_back(b);
  }
  return MonomialIdeal(J.n(), std::move(gens));
}

bool is_m_truncation(const MonomialIdeal& I, int m) {
  const MonomialIdeal sat = is_strongly_stable(I) ? saturate(I) : saturate_general(I);
  return truncate(sat, m) == I;
}

bool is_truncation(const MonomialIdeal& I) {
  if (I.is_zero()) return true;
  return is_m_truncation(I, I.min_degree());
}

int rho(const MonomialIdeal& Jsat) {
  if (Jsat.n() < 1) return 0;
  int best = 0;
  for (const auto& b : Jsat.basis()) {
    if (b[1] > 0) best = std::max(best, b.degree());
  }
  return best;
}

StarDecomposition star_decompose(const Monomial& gamma, const MonomialIdeal& J) {
  if (!J.contains(gamma)) throw DomainError("star_decompose: monomial is not in the ideal");
  Monomial cur = gamma;
  while (!J.is_generator(cur)) {
    cur = cur.div_var(cur.min_var());
    if (!J.contains(cur)) throw DomainError("star_decompose: ideal is not Borel along the stripping path");
  }
  return {gamma / cur, cur};
}

namespace {

// Depth-first enumeration of the closed subsets of {0..N-1} of a given size, where closedness
// means: if k is in the set then every index in req[k] is too, and all of req[k] < k.
// Sets are generated in increasing index order, so each prefix is itself closed.
class ClosedSetEnumerator {
 public:
  ClosedSetEnumerator(std::vector<std::vector<int>> req, long target, long cap)
      : req_(std::move(req)), target_(target), cap_(cap), member_(req_.size(), 0) {}

  std::vector<std::vector<int>> run() {
    if (target_ == 0) {
      out_.emplace_back();
      return out_;
    }
    recurse(-1);
    return out_;
  }

 private:
  void recurse(int last) {
    if (++nodes_ > cap_) throw ScaleCapError("Borel enumeration exceeded the node cap of " + std::to_string(cap_));
    const long remaining = target_ - static_cast<long>(chosen_.size());
    const int n = static_cast<int>(req_.size());
    for (int k = last + 1; k + remaining <= n; ++k) {
      bool ok = std::all_of(req_[k].begin(), req_[k].end(), [&](int j) { return member_[j] != 0; });
      if (!ok) continue;
      member_[k] = 1;
      chosen_.push_back(k);
      if (remaining == 1) {
        out_.push_back(chosen_);
      } else {
        recurse(k);
      }
      chosen_.pop_back();
      member_[k] = 0;
    }
  }

  std::vector<std::vector<int>> req_;
  long target_;
  long cap_;
  long nodes_ = 0;
  std::vector<char> member_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<MonomialIdeal> enumerate_borel_in_G(int n, int r, long s, const EnumerationOptions& opts) {
  if (n < 0 || r < 0 || s < 0) throw DomainError("enumerate_borel_in_G needs non-negative n, r, s");
  const auto& monos = monomials_of_degree(n, r);
  const long N = static_cast<long>(monos.size());
  if (s > N) throw DomainError("s exceeds the number of degree-r monomials");
  std::unordered_map<Monomial, int> index;
  for (int i = 0; i < N; ++i) index.emplace(monos[static_cast<std::size_t>(i)], i);

  // Up-sets in descending-degrevlex index order need their increasing moves (smaller indices);
  // for large s it is cheaper to enumerate the complementary down-sets in reversed order.
  const bool complement = s > N / 2;
  std::vector<std::vector<int>> req(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    const int pos = complement ? static_cast<int>(N - 1 - i) : i;
    const Monomial& m = monos[static_cast<std::size_t>(i)];
    for (const auto& nb : complement ? decreasing_moves(m) : increasing_moves(m)) {
      const int j = index.at(nb);
      req[static_cast<std::size_t>(pos)].push_back(complement ? static_cast<int>(N - 1 - j) : j);
    }
  }
  ClosedSetEnumerator en(std::move(req), complement ? N - s : s, opts.node_cap);
  std::vector<MonomialIdeal> out;
  for (const auto& set : en.run()) {
    std::vector<char> in(static_cast<std::size_t>(N), complement ? 1 : 0);
    for (int k : set) in[static_cast<std::size_t>(complement ? N - 1 - k : k)] = complement ? 0 : 1;
    std::vector<Monomial> gens;
    for (int i = 0; i < N; ++i) {
      if (in[static_cast<std::size_t>(i)]) gens.push_back(monos[static_cast<std::size_t>(i)]);
    }
    out.emplace_back(n, std::move(gens));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<MonomialIdeal> enumerate_borel_saturated(int n, const HilbertPoly& p, const EnumerationOptions& opts) {
  const ChartConstants k = chart_constants(p, n);
  std::vector<MonomialIdeal> out;
  for (const auto& J : enumerate_borel_in_G(n, k.r, k.s, opts)) {
    // dim J_{r+1} = q(r+1) is the Gotzmann persistence condition.
    long next = 0;
    for (const auto& m : monomials_of_degree(n, k.r + 1)) {
      if (J.contains(m)) ++next;
    }
    if (next != k.s_next) continue;
    MonomialIdeal sat = saturate(J);
    if (hilbert_polynomial(sat) != p) throw DomainError("persistent Borel ideal with unexpected Hilbert polynomial");
    out.push_back(std::move(sat));
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    const int ra = regularity(a);
    const int rb = regularity(b);
    if (ra != rb) return ra < rb;
    return canonical_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BorelChartIdeal make_chart_ideal(const MonomialIdeal& J) {
  if (J.is_zero() || !J.is_single_degree()) throw DomainError("chart ideal must be generated in a single degree");
  if (!is_strongly_stable(J)) throw DomainError("chart ideal must be Borel");
  BorelChartIdeal c;
  c.J = J;
  c.sat = saturate(J);
  c.r = J.min_degree();
  c.reg_sat = regularity(c.sat);
  c.rho = rho(c.sat);
  return c;
}

}  // namespace borelcover
