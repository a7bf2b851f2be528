#include "borelcover/linalg.hpp"

#include "borelcover/errors.hpp"

#include <utility>

namespace borelcover {

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::columns(std::span<const std::size_t> which) const {
  Matrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < which.size(); ++k) out(r, k) = (*this)(r, which[k]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<std::vector<Rational>> Matrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Normalizes row `pr` at column `pc` and clears that column in every other row.
void eliminate(Matrix& m, std::size_t pr, std::size_t pc) {
  const Rational inv = 1 / m(pr, pc);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(m(pr, c)) != 0) m(pr, c) *= inv;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r == pr || sgn(m(r, pc)) == 0) continue;
    const Rational f = m(r, pc);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(pr, c)) != 0) m(r, c) -= f * m(pr, c);
    }
  }
}

Matrix top_rows(const Matrix& m, std::size_t k) {
  Matrix out(k, m.cols());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

}  // namespace

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && sgn(m(found, col)) == 0) ++found;
    if (found == m.rows()) continue;
    swap_rows(m, row, found);
    eliminate(m, row, col);
    pivots.push_back(col);
    ++row;
  }
  return {top_rows(m, row), std::move(pivots)};
}

Echelon rref_on_columns(Matrix m, std::span<const std::size_t> pivot_columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col : pivot_columns) {
    if (row == m.rows()) break;
    std::size_t found = row;
    while (found < m.rows() && sgn(m(found, col)) == 0) ++found;
    if (found == m.rows()) return {Matrix(), {}};
    swap_rows(m, row, found);
    eliminate(m, row, col);
    pivots.push_back(col);
    ++row;
  }
  if (pivots.size() != pivot_columns.size()) return {Matrix(), {}};
  return {top_rows(m, row), std::move(pivots)};
}

std::size_t rank(Matrix m) { return rref(std::move(m)).pivots.size(); }

std::vector<std::vector<Rational>> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<Integer> a(n * n);
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (den / m(r, c).get_den());
    scale *= Rational(den);
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign);
  return det / scale;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  }
  return out;
}

}  // namespace borelcover
