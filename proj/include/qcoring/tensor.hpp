#pragma once

#include "qcoring/module.hpp"

namespace qcoring {

// m ⊗_t n: quotient of the K-tensor product (row-major pairing) by the span of
// (m·t)⊗n − m⊗(t·n). Carries the induced outer actions, so the result can be
// tensored again.
struct BalancedTensor {
  size_t left_dim = 0, right_dim = 0;
  QuotientSpace space;
  Bimodule outer;

  size_t dim() const { return space.dim(); }
  size_t ambient() const { return left_dim * right_dim; }
};

// pre: m.right_action and n.left_action are actions of t (arity ring_dim(t));
// for an idempotented middle ring both modules must be unital over it.
BalancedTensor tensor_over(const Bimodule& m, const RingDesc& t, const Bimodule& n);

// (a ⊗ b) * x for ambient column vectors / matrices, without materializing the
// Kronecker product.
Vec kron_apply(const Matrix& a, const Matrix& b, const Vec& x);
Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& x);

// Associativity bridge. mn = M⊗_t N, nk = N⊗_u K; the returned matrix maps the
// ambient of M ⊗ (N⊗K-quotient) to the ambient of (M⊗N-quotient) ⊗ K by
// re-reading representatives, i.e. (i,β) ↦ Σ_j sec_nk[(j,k),β]·π_mn[u,(i,j)].
Matrix regroup(const BalancedTensor& mn, const BalancedTensor& nk, size_t dim_k);

}  // namespace qcoring
