#pragma once

#include <optional>
#include <vector>

#include "qcoring/matrix.hpp"

namespace qcoring {

struct RrefResult {
  Matrix mat;
  std::vector<size_t> pivots;  // pivot column of each nonzero row, strictly increasing
};

// Gauss-Jordan with first-nonzero pivoting. The reduced form is the canonical
// representative of the row space, so subspace equality is matrix equality.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

// Linear subspace of Q^n held as its RREF basis with zero rows dropped.
class Subspace {
 public:
  static Subspace zero(size_t ambient_dim);
  static Subspace full(size_t ambient_dim);
  // Row span of the given matrix (rows are vectors of the ambient space).
  static Subspace span(size_t ambient_dim, const Matrix& rows);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<size_t> pivots() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  size_t ambient_ = 0;
  Matrix basis_;
  friend class SpanBuilder;
};

// Incremental RREF-maintaining span. Inserting rows one at a time yields the
// same canonical basis as batch reduction; reduce() additionally gives cheap
// membership tests while building.
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t ambient_dim) : ambient_(ambient_dim) {}

  // Returns true iff the vector enlarged the span.
  bool insert(Vec v);
  // Reduces v modulo the current span (in place result returned).
  Vec reduce(Vec v) const;
  bool member(const Vec& v) const { return vec_is_zero(reduce(v)); }

  size_t dim() const { return rows_.size(); }
  size_t ambient_dim() const { return ambient_; }
  Subspace subspace() const;

 private:
  size_t ambient_;
  std::vector<Vec> rows_;            // sorted by pivot column, fully reduced
  std::vector<size_t> pivot_cols_;   // parallel to rows_
};

// Solves a * X = b choosing zero for every free variable; nullopt when the
// system is inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

// Basis of { v : m * v = 0 } as a canonical Subspace of Q^(m.cols()).
Subspace kernel_basis(const Matrix& m);

// Coordinates for Q^n / W: projection sends a vector to the free-column
// coordinates of its reduction modulo W, section picks the representative
// supported on the free columns.
struct QuotientSpace {
  size_t ambient = 0;
  Subspace kernel = Subspace::zero(0);
  Matrix projection;  // dim x ambient
  Matrix section;     // ambient x dim
  size_t dim() const { return projection.rows(); }
};

QuotientSpace quotient_space(size_t ambient_dim, const Subspace& w);

}  // namespace qcoring
