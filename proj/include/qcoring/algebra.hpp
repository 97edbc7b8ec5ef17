#pragma once

#include <variant>
#include <vector>

#include "qcoring/linalg.hpp"
#include "qcoring/report.hpp"

namespace qcoring {

// Finite-dimensional unital associative Q-algebra given by structure constants
// on a fixed basis: structure[i][j] = coordinates of e_i * e_j.
class Algebra {
 public:
  Algebra(std::vector<std::vector<Vec>> structure, Vec unit);

  static Algebra rationals();

  size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::vector<Vec>>& structure() const { return structure_; }

  Vec mul(const Vec& x, const Vec& y) const;
  // matrix of left multiplication by e_i (acts on column coordinates)
  const Matrix& lmul_basis(size_t i) const { return lmul_[i]; }
  const Matrix& rmul_basis(size_t j) const { return rmul_[j]; }
  Matrix lmul(const Vec& x) const;
  Matrix rmul(const Vec& y) const;

  Algebra opposite() const;

  bool operator==(const Algebra& o) const { return structure_ == o.structure_ && unit_ == o.unit_; }

 private:
  size_t dim_;
  std::vector<std::vector<Vec>> structure_;
  std::vector<Matrix> lmul_, rmul_;
  Vec unit_;
};

// Associative ring with a distinguished finite set of pairwise orthogonal
// idempotents. The sum of the idempotents need not act as a unit on an
// arbitrary module; modules for which it does are the unital ones.
class IdemRing {
 public:
  IdemRing(std::vector<std::vector<Vec>> structure, std::vector<Vec> idempotents);

  static IdemRing from_algebra(const Algebra& a);

  size_t dim() const { return dim_; }
  const std::vector<Vec>& idempotents() const { return idempotents_; }
  const std::vector<std::vector<Vec>>& structure() const { return structure_; }

  Vec mul(const Vec& x, const Vec& y) const;
  const Matrix& lmul_basis(size_t i) const { return lmul_[i]; }
  const Matrix& rmul_basis(size_t j) const { return rmul_[j]; }
  Matrix lmul(const Vec& x) const;
  Matrix rmul(const Vec& y) const;

  // sum of the idempotents; a unit when the ring comes from a finite family
  Vec unit_sum() const;

  bool operator==(const IdemRing& o) const {
    return structure_ == o.structure_ && idempotents_ == o.idempotents_;
  }

 private:
  size_t dim_;
  std::vector<std::vector<Vec>> structure_;
  std::vector<Matrix> lmul_, rmul_;
  std::vector<Vec> idempotents_;
};

using RingDesc = std::variant<Algebra, IdemRing>;

size_t ring_dim(const RingDesc& r);
const Matrix& ring_lmul(const RingDesc& r, size_t i);
const Matrix& ring_rmul(const RingDesc& r, size_t i);
Vec ring_mul(const RingDesc& r, const Vec& x, const Vec& y);
Vec ring_unit_sum(const RingDesc& r);

// Every violated associativity or unit identity, identified by basis indices.
ValidationReport check_algebra(const Algebra& a);
ValidationReport check_idem_ring(const IdemRing& r);

// Jacobson radical via the trace form x -> tr(L_{xy}); the result is verified
// to be a nilpotent two-sided ideal.
Subspace jacobson_radical(const Algebra& a);
Subspace jacobson_radical(const IdemRing& r);

}  // namespace qcoring
