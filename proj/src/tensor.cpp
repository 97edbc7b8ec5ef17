#include "qcoring/tensor.hpp"

#include <stdexcept>

namespace qcoring {

Vec kron_apply(const Matrix& a, const Matrix& b, const Vec& x) {
  if (x.size() != a.cols() * b.cols()) throw std::invalid_argument("kron_apply: dimension mismatch");
  Vec y(a.rows() * b.rows(), Rat(0));
  for (size_t p = 0; p < a.cols(); ++p)
    for (size_t q = 0; q < b.cols(); ++q) {
      const Rat& xv = x[p * b.cols() + q];
      if (xv == 0) continue;
      for (size_t i = 0; i < a.rows(); ++i) {
        const Rat& av = a(i, p);
        if (av == 0) continue;
        const Rat coeff = av * xv;
        for (size_t j = 0; j < b.rows(); ++j) {
          const Rat& bv = b(j, q);
          if (bv != 0) y[i * b.rows() + j] += coeff * bv;
        }
      }
    }
  return y;
}

Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& x) {
  Matrix r(a.rows() * b.rows(), x.cols());
  for (size_t c = 0; c < x.cols(); ++c) r.set_col(c, kron_apply(a, b, x.col(c)));
  return r;
}

BalancedTensor tensor_over(const Bimodule& m, const RingDesc& t, const Bimodule& n) {
  const size_t td = ring_dim(t);
  if (m.right_action.size() != td || n.left_action.size() != td)
    throw std::invalid_argument("tensor_over: middle ring arity mismatch");
  if (std::holds_alternative<IdemRing>(t)) {
    const Vec u = ring_unit_sum(t);
    if (act(m.right_action, u) != Matrix::identity(m.dim) ||
        act(n.left_action, u) != Matrix::identity(n.dim))
      throw std::invalid_argument("tensor_over: module is not unital over the idempotented middle ring");
  }

  const size_t dm = m.dim, dn = n.dim;
  SpanBuilder rel(dm * dn);
  for (size_t j = 0; j < td; ++j) {
    const Matrix& mt = m.right_action[j];
    const Matrix& tn = n.left_action[j];
    for (size_t a = 0; a < dm; ++a)
      for (size_t b = 0; b < dn; ++b) {
        Vec v(dm * dn, Rat(0));
        bool nonzero = false;
        for (size_t k = 0; k < dm; ++k)
          if (mt(k, a) != 0) {
            v[k * dn + b] += mt(k, a);
            nonzero = true;
          }
        for (size_t k = 0; k < dn; ++k)
          if (tn(k, b) != 0) {
            v[a * dn + k] -= tn(k, b);
            nonzero = true;
          }
        if (nonzero) rel.insert(std::move(v));
      }
  }

  BalancedTensor bt;
  bt.left_dim = dm;
  bt.right_dim = dn;
  bt.space = quotient_space(dm * dn, rel.subspace());

  bt.outer.dim = bt.space.dim();
  const Matrix id_m = Matrix::identity(dm), id_n = Matrix::identity(dn);
  for (const auto& l : m.left_action)
    bt.outer.left_action.push_back(bt.space.projection * kron_apply(l, id_n, bt.space.section));
  for (const auto& r : n.right_action)
    bt.outer.right_action.push_back(bt.space.projection * kron_apply(id_m, r, bt.space.section));
  return bt;
}

Matrix regroup(const BalancedTensor& mn, const BalancedTensor& nk, size_t dim_k) {
  if (mn.right_dim != nk.left_dim || nk.right_dim != dim_k)
    throw std::invalid_argument("regroup: dimension mismatch");
  const size_t dim_m = mn.left_dim, dim_n = mn.right_dim;
  const Matrix& pi = mn.space.projection;
  const Matrix& sec = nk.space.section;
  Matrix out(mn.dim() * dim_k, dim_m * nk.dim());
  for (size_t beta = 0; beta < nk.dim(); ++beta)
    for (size_t j = 0; j < dim_n; ++j)
      for (size_t k = 0; k < dim_k; ++k) {
        const Rat& s = sec(j * dim_k + k, beta);
        if (s == 0) continue;
        for (size_t i = 0; i < dim_m; ++i)
          for (size_t u = 0; u < mn.dim(); ++u) {
            const Rat& p = pi(u, i * dim_n + j);
            if (p != 0) out(u * dim_k + k, i * nk.dim() + beta) += s * p;
          }
      }
  return out;
}

}  // namespace qcoring
