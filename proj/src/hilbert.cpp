#include "borelcover/hilbert.hpp"

#include "borelcover/errors.hpp"
#include "borelcover/linalg.hpp"
#include "borelcover/text.hpp"

#include <algorithm>

namespace borelcover {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Coeffs sub(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// C(t + c, a) = (t + c)(t + c - 1) ... (t + c - a + 1) / a! as a polynomial in t.
Coeffs shifted_binomial(long c, long a) {
  Coeffs poly{Rational(1)};
  for (long k = 0; k < a; ++k) {
    Coeffs next(poly.size() + 1);
    const Rational shift(c - k);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += poly[i] * shift;
    }
    poly = std::move(next);
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(a));
  for (auto& x : poly) x /= Rational(fact);
  trim(poly);
  return poly;
}

Rational eval(const Coeffs& c, const Rational& t) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

HilbertPoly HilbertPoly::from_binomial_coords(std::vector<Integer> coords) {
  while (!coords.empty() && coords.back() == 0) coords.pop_back();
  HilbertPoly h;
  h.coords_ = std::move(coords);
  return h;
}

HilbertPoly HilbertPoly::from_coefficients(const std::vector<Rational>& coeffs_in) {
  Coeffs coeffs = coeffs_in;
  trim(coeffs);
  // Triangular solve against the basis B_k(t) = C(t+k, k) at t = -1, -2, ...:
  // B_k(-j) = 0 for k >= j and B_{j-1}(-j) = (-1)^(j-1).
  std::vector<Integer> coords;
  for (std::size_t j = 1; j <= coeffs.size(); ++j) {
    Rational target = eval(coeffs, Rational(-static_cast<long>(j)));
    for (std::size_t k = 0; k + 1 < j; ++k) {
      target -= Rational(coords[k] * binomial_signed(Integer(static_cast<long>(k) - static_cast<long>(j)), static_cast<long>(k)));
    }
    Rational lead(binomial_signed(Integer(-1), static_cast<long>(j - 1)));
    Rational c = target / lead;
    if (c.get_den() != 1) throw DomainError("polynomial is not integer valued");
    coords.push_back(c.get_num());
  }
  return from_binomial_coords(std::move(coords));
}

HilbertPoly HilbertPoly::parse(std::string_view text) {
  return from_coefficients(parse_univariate_t(text));
}

std::vector<Rational> HilbertPoly::coefficients() const {
  Coeffs out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    Coeffs term = shifted_binomial(static_cast<long>(k), static_cast<long>(k));
    for (auto& x : term) x *= Rational(coords_[k]);
    out = add(std::move(out), term);
  }
  return out;
}

Integer HilbertPoly::operator()(long t) const {
  Integer acc = 0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    acc += coords_[k] * binomial_signed(Integer(t + static_cast<long>(k)), static_cast<long>(k));
  }
  return acc;
}

long HilbertPoly::at(long t) const {
  Integer v = (*this)(t);
  if (!v.fits_slong_p()) throw ScaleCapError("Hilbert polynomial value does not fit in 64 bits");
  return v.get_si();
}

std::string HilbertPoly::to_string() const {
  Coeffs c = coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    Rational mag = abs(c[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty()) {
      out += borelcover::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += borelcover::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

long hilbert_function(const MonomialIdeal& J, int t) {
  if (t < 0) throw DomainError("hilbert_function needs t >= 0");
  long count = 0;
  for (const auto& m : monomials_of_degree(J.n(), t)) {
    if (!J.contains(m)) ++count;
  }
  return count;
}

namespace {

bool is_strongly_stable_basis(const MonomialIdeal& J) {
  for (const auto& b : J.basis()) {
    for (const auto& up : increasing_moves(b)) {
      if (!J.contains(up)) return false;
    }
  }
  return true;
}

}  // namespace

HilbertPoly hilbert_polynomial(const MonomialIdeal& J) {
  const int n = J.n();
  if (J.is_zero()) {
    std::vector<Integer> coords(static_cast<std::size_t>(n), 0);
    coords.push_back(1);
    return HilbertPoly::from_binomial_coords(coords);
  }
  if (J.is_unit()) return {};
  if (!is_strongly_stable_basis(J)) {
    return hilbert_polynomial_by_persistence([&](int t) { return hilbert_function(J, t); },
                                             J.max_degree())
        .polynomial;
  }
  // For Borel ideals the Hilbert function is polynomial from reg(J) on.
  const int reg = J.max_degree();
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  Matrix a(dim, dim);
  Matrix rhs(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    const long t = reg + static_cast<long>(i);
    for (std::size_t k = 0; k < dim; ++k) {
      a(i, k) = Rational(binomial(t + static_cast<long>(k), static_cast<long>(k)));
    }
    rhs(i, 0) = Rational(hilbert_function(J, static_cast<int>(t)));
  }
  Matrix sol = inverse(a) * rhs;
  std::vector<Integer> coords;
  for (std::size_t k = 0; k < dim; ++k) {
    if (sol(k, 0).get_den() != 1) throw DomainError("interpolated Hilbert polynomial is not integral");
    coords.push_back(sol(k, 0).get_num());
  }
  HilbertPoly h = HilbertPoly::from_binomial_coords(std::move(coords));
  const int check = reg + n + 1;
  if (h(check) != hilbert_function(J, check)) {
    throw DomainError("Hilbert function is not polynomial from the regularity on");
  }
  return h;
}

std::vector<std::pair<long, long>> macaulay_representation(long h, long t) {
  if (h < 0 || t < 1) throw DomainError("Macaulay representation needs h >= 0, t >= 1");
  std::vector<std::pair<long, long>> rep;
  for (long i = t; i >= 1 && h > 0; --i) {
    long k = i;
    while (binomial(k + 1, i) <= h) ++k;
    rep.emplace_back(k, i);
    h -= binomial(k, i).get_si();
  }
  return rep;
}

long macaulay_growth(long h, long t) {
  Integer acc = 0;
  for (const auto& [k, i] : macaulay_representation(h, t)) acc += binomial(k + 1, i + 1);
  if (!acc.fits_slong_p()) throw ScaleCapError("Macaulay growth overflows 64 bits");
  return acc.get_si();
}

PersistenceResult hilbert_polynomial_by_persistence(const std::function<long(int)>& hf, int start,
                                                    int max_degree) {
  int t = std::max(start, 1);
  long current = hf(t);
  for (; t <= max_degree; ++t) {
    const long next = hf(t + 1);
    if (next == macaulay_growth(current, t)) {
      // h(x) = sum_i C(x + k_i - t, k_i - i) for x >= t.
      Coeffs poly;
      for (const auto& [k, i] : macaulay_representation(current, t)) {
        poly = add(std::move(poly), shifted_binomial(k - t, k - i));
      }
      return {HilbertPoly::from_coefficients(poly), t};
    }
    current = next;
  }
  throw ScaleCapError("Hilbert function did not stabilize by degree " + std::to_string(max_degree));
}

std::vector<int> gotzmann_representation(const HilbertPoly& p, int n) {
  if (p.is_zero()) throw DomainError("Hilbert polynomial must be nonzero");
  if (p.degree() > n - 1 && !(p.degree() == 0)) {
    throw DomainError("Hilbert polynomial degree exceeds n - 1");
  }
  constexpr long kMaxTerms = 1'000'000;
  std::vector<int> a;
  Coeffs rem = p.coefficients();
  while (!rem.empty()) {
    const long d = static_cast<long>(rem.size()) - 1;
    if (sgn(rem.back()) < 0 || d > std::max(n - 1, 0)) {
      throw DomainError("Hilbert polynomial " + p.to_string() + " is not admissible in P^" + std::to_string(n));
    }
    if (d == 0) {
      if (rem[0].get_den() != 1 || !rem[0].get_num().fits_slong_p() ||
          rem[0].get_num().get_si() + static_cast<long>(a.size()) > kMaxTerms) {
        throw ScaleCapError("Gotzmann representation too long");
      }
      a.insert(a.end(), static_cast<std::size_t>(rem[0].get_num().get_si()), 0);
      break;
    }
    if (static_cast<long>(a.size()) >= kMaxTerms) throw ScaleCapError("Gotzmann representation too long");
    // Summand i (1-based) is C(t + d - i + 1, d); here i - 1 = a.size().
    rem = sub(std::move(rem), shifted_binomial(d - static_cast<long>(a.size()), d));
    a.push_back(static_cast<int>(d));
  }
  return a;
}

int gotzmann_number(const HilbertPoly& p, int n) {
  return static_cast<int>(gotzmann_representation(p, n).size());
}

long ambient_dimension(int n, long t) {
  if (t < 0) return 0;
  Integer v = binomial(n + t, n);
  if (!v.fits_slong_p()) throw ScaleCapError("N(t) does not fit in 64 bits");
  return v.get_si();
}

ChartConstants chart_constants(const HilbertPoly& p, int n) {
  ChartConstants c;
  c.n = n;
  c.p = p;
  c.r = gotzmann_number(p, n);
  c.N_r = ambient_dimension(n, c.r);
  c.s = c.q(c.r);
  c.s_next = c.q(c.r + 1);
  c.D = p.at(c.r) * c.s;
  if (c.s < 0) throw DomainError("Hilbert polynomial exceeds the ambient dimension");
  return c;
}

}  // namespace borelcover
