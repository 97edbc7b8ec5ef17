#include "qcoring/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcoring {

RrefResult rref(const Matrix& m) {
  Matrix r(m);
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    size_t pr = row;
    while (pr < r.rows() && r(pr, col) == 0) ++pr;
    if (pr == r.rows()) continue;
    if (pr != row)
      for (size_t j = col; j < r.cols(); ++j) std::swap(r(row, j), r(pr, j));
    Rat inv = 1 / r(row, col);
    if (inv != 1)
      for (size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      const Rat f = r(i, col);
      if (f == 0) continue;
      for (size_t j = col; j < r.cols(); ++j)
        if (r(row, j) != 0) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::zero(size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim)); }

Subspace Subspace::full(size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

Subspace Subspace::span(size_t ambient_dim, const Matrix& rows) {
  if (rows.cols() != ambient_dim && rows.rows() != 0)
    throw std::invalid_argument("Subspace::span: dimension mismatch");
  SpanBuilder sb(ambient_dim);
  for (size_t i = 0; i < rows.rows(); ++i) sb.insert(rows.row(i));
  return sb.subspace();
}

std::vector<size_t> Subspace::pivots() const {
  std::vector<size_t> p;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    size_t j = 0;
    while (j < ambient_ && basis_(i, j) == 0) ++j;
    p.push_back(j);
  }
  return p;
}

bool Subspace::contains(const Vec& v) const {
  SpanBuilder sb(ambient_);
  for (size_t i = 0; i < basis_.rows(); ++i) sb.insert(basis_.row(i));
  return sb.member(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  SpanBuilder sb(ambient_);
  for (size_t i = 0; i < basis_.rows(); ++i) sb.insert(basis_.row(i));
  for (size_t i = 0; i < other.basis_.rows(); ++i)
    if (!sb.member(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: dimension mismatch");
  SpanBuilder sb(ambient_);
  for (size_t i = 0; i < basis_.rows(); ++i) sb.insert(basis_.row(i));
  for (size_t i = 0; i < other.basis_.rows(); ++i) sb.insert(other.basis_.row(i));
  return sb.subspace();
}

Vec SpanBuilder::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  for (size_t k = 0; k < rows_.size(); ++k) {
    const size_t p = pivot_cols_[k];
    if (v[p] == 0) continue;
    const Rat f = v[p];
    const Vec& r = rows_[k];
    for (size_t j = p; j < ambient_; ++j)
      if (r[j] != 0) v[j] -= f * r[j];
  }
  return v;
}

bool SpanBuilder::insert(Vec v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  if (v[p] != 1) {
    const Rat inv = 1 / v[p];
    for (size_t j = p; j < ambient_; ++j)
      if (v[j] != 0) v[j] *= inv;
  }
  // keep earlier rows reduced against the new pivot
  for (size_t k = 0; k < rows_.size(); ++k) {
    Vec& r = rows_[k];
    if (r[p] == 0) continue;
    const Rat f = r[p];
    for (size_t j = p; j < ambient_; ++j)
      if (v[j] != 0) r[j] -= f * v[j];
  }
  const auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), p) - pivot_cols_.begin();
  pivot_cols_.insert(pivot_cols_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace SpanBuilder::subspace() const {
  Matrix b(rows_.size(), ambient_);
  for (size_t i = 0; i < rows_.size(); ++i) b.set_row(i, rows_[i]);
  return Subspace(ambient_, std::move(b));
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: dimension mismatch");
  RrefResult r = rref(hstack(a, b));
  for (size_t k = 0; k < r.pivots.size(); ++k)
    if (r.pivots[k] >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (size_t k = 0; k < r.pivots.size(); ++k)
    for (size_t j = 0; j < b.cols(); ++j) x(r.pivots[k], j) = r.mat(k, a.cols() + j);
  return x;
}

Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  SpanBuilder sb(m.cols());
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.mat(k, f);
    sb.insert(std::move(v));
  }
  return sb.subspace();
}

QuotientSpace quotient_space(size_t ambient_dim, const Subspace& w) {
  if (w.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient_space: dimension mismatch");
  const auto piv = w.pivots();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (size_t p : piv) is_pivot[p] = true;
  const size_t q = ambient_dim - piv.size();
  Matrix proj(q, ambient_dim), sec(ambient_dim, q);
  size_t r = 0;
  for (size_t f = 0; f < ambient_dim; ++f) {
    if (is_pivot[f]) continue;
    proj(r, f) = 1;
    for (size_t k = 0; k < piv.size(); ++k) {
      const Rat& c = w.basis()(k, f);
      if (c != 0) proj(r, piv[k]) = -c;
    }
    sec(f, r) = 1;
    ++r;
  }
  return QuotientSpace{ambient_dim, w, std::move(proj), std::move(sec)};
}

}  // namespace qcoring
