#include "qcoring/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qcoring {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rat& Matrix::at(size_t i, size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
  return a_[i * cols_ + j];
}

const Rat& Matrix::at(size_t i, size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::at");
  return a_[i * cols_ + j];
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix+: dimension mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix-: dimension mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& x = a_[i * cols_ + k];
      if (x == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Rat& y = o.a_[k * o.cols_ + j];
        if (y != 0) r.a_[i * o.cols_ + j] += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Rat& c) const {
  Matrix r(*this);
  for (auto& x : r.a_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Vec Matrix::col(size_t j) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::row(size_t i) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Matrix::set_col(size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_col: dimension mismatch");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: dimension mismatch");
  for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vec r(rows_, Rat(0));
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    for (size_t i = 0; i < rows_; ++i) {
      const Rat& x = a_[i * cols_ + j];
      if (x != 0) r[i] += x * v[j];
    }
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_str((*this)(i, j));
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i1 = 0; i1 < a.rows(); ++i1)
    for (size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Rat& x = a(i1, j1);
      if (x == 0) continue;
      for (size_t i2 = 0; i2 < b.rows(); ++i2)
        for (size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Rat& y = b(i2, j2);
          if (y != 0) r(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
    }
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: dimension mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: dimension mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Vec flatten(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

Matrix unflatten(const Vec& v, size_t rows, size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: dimension mismatch");
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

}  // namespace qcoring
