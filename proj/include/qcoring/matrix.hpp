#pragma once

#include <cstddef>
#include <string>

#include "qcoring/rational.hpp"

namespace qcoring {

// Dense row-major matrix over Q. Linear maps act on column coordinate vectors,
// so a map V -> W with dim V = c, dim W = r is an r x c matrix and composition
// is the ordinary product.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Rat& at(size_t i, size_t j);
  const Rat& at(size_t i, size_t j) const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& c) const;

  Matrix transpose() const;

  Vec col(size_t j) const;
  Vec row(size_t i) const;
  void set_col(size_t j, const Vec& v);
  void set_row(size_t i, const Vec& v);

  // mat * column vector
  Vec apply(const Vec& v) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

// Kronecker product with the fixed row-major pairing (i, j) -> i * dim2 + j on
// both row and column indices.
Matrix kron(const Matrix& a, const Matrix& b);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Row-major flattening of an r x c matrix to a vector of length r*c, and back.
Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, size_t rows, size_t cols);

}  // namespace qcoring
