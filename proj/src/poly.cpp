#include "borelcover/poly.hpp"

#include "borelcover/linalg.hpp"

namespace borelcover {

XPoly apply_change_of_coords(const XPoly& f, const CoordinateChange& g) {
  const int nv = f.n() + 1;
  if (static_cast<int>(g.size()) != nv) throw DomainError("coordinate change has the wrong size");
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != nv) throw DomainError("coordinate change has the wrong size");
  }
  if (sgn(determinant(Matrix::from_rows(g))) == 0) throw DomainError("coordinate change is singular");

  // powers[i][k] = (sum_j g_ij x_j)^k
  std::vector<std::vector<XPoly>> powers(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    XPoly linear(f.n());
    for (int j = 0; j < nv; ++j) {
      linear.add_term(Monomial::variable(f.n(), j), g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    powers[static_cast<std::size_t>(i)] = {XPoly::monomial(Monomial::one(f.n())), linear};
  }
  XPoly out(f.n());
  for (const auto& [m, c] : f.terms()) {
    XPoly image = XPoly::monomial(Monomial::one(f.n()), c);
    for (int i = 0; i < nv; ++i) {
      auto& pw = powers[static_cast<std::size_t>(i)];
      while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * pw[1]);
      if (m[i] > 0) image = image * pw[static_cast<std::size_t>(m[i])];
    }
    out += image;
  }
  return out;
}

XPoly specialize(const ParamXPoly& f, const Assignment& values) {
  XPoly out(f.n());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.evaluate(values));
  return out;
}

ParamXPoly lift(const XPoly& f) {
  ParamXPoly out(f.n());
  for (const auto& [m, c] : f.terms()) out.add_term(m, ParamPoly(c));
  return out;
}

}  // namespace borelcover
