#include "borelcover/chart.hpp"

#include "borelcover/errors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace borelcover {

namespace {

std::unordered_map<Monomial, std::size_t> column_index(int n, int m) {
  const auto& monos = monomials_of_degree(n, m);
  std::unordered_map<Monomial, std::size_t> idx;
  idx.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

int common_degree(const std::vector<XPoly>& forms) {
  std::optional<int> d;
  for (const auto& f : forms) {
    auto fd = f.homogeneous_degree();
    if (!fd) continue;
    if (d && *d != *fd) throw DomainError("forms have different degrees");
    d = fd;
  }
  if (!d) throw DomainError("expected at least one nonzero form");
  return *d;
}

}  // namespace

Matrix coefficient_matrix(const std::vector<XPoly>& forms, int n, int m) {
  const auto idx = column_index(n, m);
  Matrix M(forms.size(), idx.size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].n() != n) throw DomainError("form lives in a different ambient ring");
    for (const auto& [mono, c] : forms[r].terms()) {
      if (mono.degree() != m) throw DomainError("form is not homogeneous of degree " + std::to_string(m));
      M(r, idx.at(mono)) = c;
    }
  }
  return M;
}

std::vector<XPoly> forms_from_rows(const Matrix& rows, int n, int m) {
  const auto& monos = monomials_of_degree(n, m);
  if (rows.cols() != monos.size()) throw DomainError("row length does not match the degree");
  std::vector<XPoly> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    XPoly f(n);
    for (std::size_t c = 0; c < rows.cols(); ++c) f.add_term(monos[c], rows(r, c));
    out.push_back(std::move(f));
  }
  return out;
}

Echelon ideal_component(const std::vector<XPoly>& gens, int n, int t) {
  const auto idx = column_index(n, t);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.n() != n) throw DomainError("generator lives in a different ambient ring");
    auto d = g.homogeneous_degree();
    if (!d || *d > t) continue;
    for (const auto& mu : monomials_of_degree(n, t - *d)) {
      std::vector<Rational> row(idx.size());
      for (const auto& [mono, c] : g.terms()) row[idx.at(mono * mu)] = c;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return {Matrix(0, idx.size()), {}};
  return rref(Matrix::from_rows(rows));
}

long component_dimension(const std::vector<XPoly>& gens, int n, int t) {
  return static_cast<long>(ideal_component(gens, n, t).pivots.size());
}

namespace {

std::vector<std::size_t> basis_columns(const MonomialIdeal& J, int r) {
  const auto idx = column_index(J.n(), r);
  std::vector<std::size_t> cols;
  for (const auto& b : J.basis()) cols.push_back(idx.at(b));
  return cols;
}

void check_chart_shape(const std::vector<XPoly>& forms, const MonomialIdeal& J) {
  if (J.is_zero() || !J.is_single_degree()) throw DomainError("chart ideal must be generated in one degree");
  if (forms.size() != J.size()) {
    throw DomainError("expected " + std::to_string(J.size()) + " forms, got " + std::to_string(forms.size()));
  }
  for (const auto& f : forms) {
    auto d = f.homogeneous_degree();
    if (d && *d != J.min_degree()) throw DomainError("form degree differs from the chart degree");
  }
}

}  // namespace

Rational pluecker_coordinate(const std::vector<XPoly>& forms, const MonomialIdeal& J) {
  check_chart_shape(forms, J);
  const int r = J.min_degree();
  const Matrix M = coefficient_matrix(forms, J.n(), r);
  const auto cols = basis_columns(J, r);
  return determinant(M.columns(cols));
}

ChartPoint chart_form(const std::vector<XPoly>& forms, const MonomialIdeal& J) {
  check_chart_shape(forms, J);
  const int r = J.min_degree();
  const auto cols = basis_columns(J, r);
  Echelon e = rref_on_columns(coefficient_matrix(forms, J.n(), r), cols);
  if (e.pivots.size() != cols.size()) throw DomainError("not in chart: the Pluecker coordinate vanishes");
  ChartPoint out{J, {}};
  auto polys = forms_from_rows(e.reduced, J.n(), r);
  for (std::size_t k = 0; k < polys.size(); ++k) out.G.push_back({J.basis()[k], std::move(polys[k])});
  return out;
}

MonomialIdeal initial_monomials_gauss(const std::vector<XPoly>& forms, int n) {
  if (forms.empty()) return MonomialIdeal::zero(n);
  const int m = common_degree(forms);
  Echelon e = rref(coefficient_matrix(forms, n, m));
  if (e.pivots.size() != forms.size()) {
    throw DomainError("forms are linearly dependent (rank " + std::to_string(e.pivots.size()) + " of " +
                      std::to_string(forms.size()) + ")");
  }
  const auto& monos = monomials_of_degree(n, m);
  std::vector<Monomial> heads;
  for (std::size_t p : e.pivots) heads.push_back(monos[p]);
  return MonomialIdeal(n, std::move(heads));
}

long CoordinateSampler::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t rem = (0 - range) % range;  // 2^64 mod range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return lo + static_cast<long>(x % range);
}

CoordinateChange CoordinateSampler::next(int n, long bound) {
  if (bound < 1) throw DomainError("coordinate bound must be at least 1");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  while (true) {
    CoordinateChange g(dim, std::vector<Rational>(dim));
    for (auto& row : g) {
      for (auto& x : row) x = uniform(-bound, bound);
    }
    if (is_invertible(g)) return g;
  }
}

CoordinateChange random_coordinate_change(std::uint64_t seed, int n, long bound) {
  return CoordinateSampler(seed).next(n, bound);
}

CoordinateChange identity_change(int n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  CoordinateChange g(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) g[i][i] = 1;
  return g;
}

bool is_invertible(const CoordinateChange& g) {
  for (const auto& row : g) {
    if (row.size() != g.size()) return false;
  }
  return sgn(determinant(Matrix::from_rows(g))) != 0;
}

bool in_hilb(const std::vector<XPoly>& forms, const ChartConstants& k) {
  const int r = common_degree(forms);
  if (component_dimension(forms, k.n, r) != k.s) throw DomainError("in_hilb needs s independent forms");
  return component_dimension(forms, k.n, r + 1) == k.q(r + 1);
}

IdealSummary summarize_ideal(const std::vector<XPoly>& gens, int n) {
  int maxdeg = -1;
  for (const auto& g : gens) {
    if (g.n() != n) throw DomainError("generator lives in a different ambient ring");
    if (auto d = g.homogeneous_degree()) maxdeg = std::max(maxdeg, *d);
  }
  if (maxdeg < 0) throw DomainError("the zero ideal has no admissible Hilbert polynomial");

  IdealSummary out;
  auto hf = [&](int t) { return ambient_dimension(n, t) - component_dimension(gens, n, t); };
  PersistenceResult pr = hilbert_polynomial_by_persistence(hf, maxdeg);
  out.hp = pr.polynomial;
  out.persistence_degree = pr.degree;
  out.constants = chart_constants(out.hp, n);
  const int r = out.constants.r;

  Echelon Ir = ideal_component(gens, n, r);
  if (static_cast<long>(Ir.pivots.size()) == out.constants.s) {
    out.saturated_r = forms_from_rows(Ir.reduced, n, r);
    return out;
  }
  // (I^sat)_r = {f in S_r : f * S_{t-r} lies in I_t}, for t beyond both r and the
  // degree from which I and I^sat agree.
  const int t = std::max(pr.degree, r);
  Echelon It = ideal_component(gens, n, t);
  const auto& top = monomials_of_degree(n, t);
  std::vector<long> pivot_row(top.size(), -1);
  for (std::size_t k = 0; k < It.pivots.size(); ++k) pivot_row[It.pivots[k]] = static_cast<long>(k);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < top.size(); ++c) {
    if (pivot_row[c] < 0) free_cols.push_back(c);
  }
  const auto idx = column_index(n, t);
  const auto& low = monomials_of_degree(n, r);
  const auto& shifts = monomials_of_degree(n, t - r);
  Matrix A(shifts.size() * free_cols.size(), low.size());
  for (std::size_t j = 0; j < low.size(); ++j) {
    for (std::size_t d = 0; d < shifts.size(); ++d) {
      const std::size_t c = idx.at(low[j] * shifts[d]);
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        Rational v = pivot_row[c] >= 0 ? Rational(-It.reduced(static_cast<std::size_t>(pivot_row[c]), free_cols[f]))
                                       : Rational(c == free_cols[f] ? 1 : 0);
        A(d * free_cols.size() + f, j) = v;
      }
    }
  }
  auto ker = kernel(A);
  if (static_cast<long>(ker.size()) != out.constants.s) {
    throw DomainError("saturated component has unexpected dimension");
  }
  out.saturated_r = forms_from_rows(rref(Matrix::from_rows(ker)).reduced, n, r);
  return out;
}

namespace {

std::vector<XPoly> transform(const std::vector<XPoly>& forms, const CoordinateChange& g) {
  std::vector<XPoly> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(apply_change_of_coords(f, g));
  return out;
}

}  // namespace

std::vector<MonomialIdeal> all_charts(const std::vector<XPoly>& saturated_r, const CoordinateChange& g,
                                      const std::vector<MonomialIdeal>& candidates, int r) {
  const auto moved = transform(saturated_r, g);
  std::vector<MonomialIdeal> out;
  for (const auto& Jsat : candidates) {
    if (sgn(pluecker_coordinate(moved, truncate(Jsat, r))) != 0) out.push_back(Jsat);
  }
  return out;
}

OpenSetResult borel_open_set(const std::vector<XPoly>& gens, int n, const OpenSetOptions& opts) {
  OpenSetResult out;
  out.summary = summarize_ideal(gens, n);
  const int r = out.summary.constants.r;
  const auto candidates = enumerate_borel_saturated(n, out.summary.hp, opts.enumeration);
  if (opts.g && !is_invertible(*opts.g)) throw DomainError("the given change of coordinates is singular");

  CoordinateSampler sampler(opts.seed);
  while (true) {
    if (!opts.g && out.tried >= opts.max_tries) {
      throw ScaleCapError("no Borel chart found after " + std::to_string(opts.max_tries) + " coordinate changes");
    }
    CoordinateChange g = opts.g ? *opts.g : sampler.next(n, opts.bound);
    ++out.tried;
    const auto moved = transform(out.summary.saturated_r, g);
    for (const auto& Jsat : candidates) {
      MonomialIdeal Jr = truncate(Jsat, r);
      if (sgn(pluecker_coordinate(moved, Jr)) == 0) continue;
      out.g = g;
      out.J = std::move(Jr);
      out.Jsat = Jsat;
      if (opts.all_charts) out.charts = all_charts(out.summary.saturated_r, g, candidates, r);
      return out;
    }
    if (opts.g) throw DomainError("I^g lies in no Borel chart for the given change of coordinates");
  }
}

}  // namespace borelcover
