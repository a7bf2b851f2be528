#pragma once

#include "borelcover/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace borelcover {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix columns(std::span<const std::size_t> which) const;
  Matrix operator*(const Matrix& other) const;
  std::vector<std::vector<Rational>> to_rows() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; zero rows are dropped and `pivots[k]` is the pivot column of row k.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination choosing, for each row, the leftmost available pivot column.
Echelon rref(Matrix m);

/// Gauss-Jordan elimination that only pivots on the listed columns, in the listed order.
/// Returns an empty pivot list if the listed block is singular.
Echelon rref_on_columns(Matrix m, std::span<const std::size_t> pivot_columns);

std::size_t rank(Matrix m);
/// Basis of the right null space {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel(const Matrix& m);

/// Fraction-free Bareiss determinant (rows are first scaled to integers).
Rational determinant(const Matrix& m);

Matrix inverse(const Matrix& m);

}  // namespace borelcover
