#include "qcoring/algebra.hpp"

#include <stdexcept>

namespace qcoring {

namespace {

void build_mult_tables(const std::vector<std::vector<Vec>>& structure, size_t dim,
                       std::vector<Matrix>& lmul, std::vector<Matrix>& rmul) {
  if (structure.size() != dim) throw std::invalid_argument("structure: dimension mismatch");
  for (const auto& row : structure) {
    if (row.size() != dim) throw std::invalid_argument("structure: dimension mismatch");
    for (const auto& v : row)
      if (v.size() != dim) throw std::invalid_argument("structure: dimension mismatch");
  }
  lmul.assign(dim, Matrix(dim, dim));
  rmul.assign(dim, Matrix(dim, dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) {
        const Rat& c = structure[i][j][k];
        if (c != 0) {
          lmul[i](k, j) = c;
          rmul[j](k, i) = c;
        }
      }
}

template <class Ring>
Vec mul_impl(const Ring& r, const Vec& x, const Vec& y) {
  if (x.size() != r.dim() || y.size() != r.dim()) throw std::invalid_argument("mul: dimension mismatch");
  Vec out(r.dim(), Rat(0));
  for (size_t i = 0; i < r.dim(); ++i) {
    if (x[i] == 0) continue;
    Vec part = r.lmul_basis(i).apply(y);
    for (size_t k = 0; k < r.dim(); ++k)
      if (part[k] != 0) out[k] += x[i] * part[k];
  }
  return out;
}

template <class Ring>
ValidationReport check_associativity(const Ring& r) {
  ValidationReport rep;
  const size_t n = r.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // (e_i e_j) e_k vs e_i (e_j e_k), as matrices acting on e_k at once
      Matrix lhs = r.lmul(r.mul(basis_vec(n, i), basis_vec(n, j)));
      Matrix rhs = r.lmul_basis(i) * r.lmul_basis(j);
      if (lhs != rhs)
        for (size_t k = 0; k < n; ++k)
          if (lhs.col(k) != rhs.col(k))
            rep.fail("associativity fails at basis triple (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(k) + ")");
    }
  return rep;
}

template <class Ring>
Subspace radical_impl(const Ring& r) {
  const size_t n = r.dim();
  // trace form kernel (Dickson): x in rad iff tr(L_{x e_j}) = 0 for all j
  Matrix form(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Matrix l = r.lmul(r.mul(basis_vec(n, i), basis_vec(n, j)));
      Rat tr(0);
      for (size_t k = 0; k < n; ++k) tr += l(k, k);
      form(i, j) = tr;
    }
  Subspace rad = kernel_basis(form);

  // verify: two-sided ideal and nilpotent
  for (size_t b = 0; b < rad.dim(); ++b) {
    const Vec x = rad.basis().row(b);
    for (size_t i = 0; i < n; ++i) {
      if (!rad.contains(r.lmul_basis(i).apply(x)) || !rad.contains(r.rmul_basis(i).apply(x)))
        throw std::logic_error("radical candidate is not an ideal");
    }
  }
  Subspace power = rad;
  for (size_t it = 0; it < n && power.dim() > 0; ++it) {
    SpanBuilder next(n);
    for (size_t a = 0; a < power.dim(); ++a)
      for (size_t b = 0; b < rad.dim(); ++b)
        next.insert(r.mul(power.basis().row(a), rad.basis().row(b)));
    Subspace np = next.subspace();
    if (np == power && power.dim() > 0) throw std::logic_error("radical candidate is not nilpotent");
    power = np;
  }
  if (power.dim() > 0) throw std::logic_error("radical candidate is not nilpotent");
  return rad;
}

}  // namespace

Algebra::Algebra(std::vector<std::vector<Vec>> structure, Vec unit)
    : dim_(structure.size()), structure_(std::move(structure)), unit_(std::move(unit)) {
  if (unit_.size() != dim_) throw std::invalid_argument("unit: dimension mismatch");
  build_mult_tables(structure_, dim_, lmul_, rmul_);
}

Algebra Algebra::rationals() {
  return Algebra({{Vec{Rat(1)}}}, Vec{Rat(1)});
}

Vec Algebra::mul(const Vec& x, const Vec& y) const { return mul_impl(*this, x, y); }

Matrix Algebra::lmul(const Vec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("lmul: dimension mismatch");
  Matrix m(dim_, dim_);
  for (size_t i = 0; i < dim_; ++i)
    if (x[i] != 0) m = m + lmul_[i] * x[i];
  return m;
}

Matrix Algebra::rmul(const Vec& y) const {
  if (y.size() != dim_) throw std::invalid_argument("rmul: dimension mismatch");
  Matrix m(dim_, dim_);
  for (size_t j = 0; j < dim_; ++j)
    if (y[j] != 0) m = m + rmul_[j] * y[j];
  return m;
}

Algebra Algebra::opposite() const {
  std::vector<std::vector<Vec>> st(dim_, std::vector<Vec>(dim_));
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) st[i][j] = structure_[j][i];
  return Algebra(std::move(st), unit_);
}

IdemRing::IdemRing(std::vector<std::vector<Vec>> structure, std::vector<Vec> idempotents)
    : dim_(structure.size()), structure_(std::move(structure)), idempotents_(std::move(idempotents)) {
  build_mult_tables(structure_, dim_, lmul_, rmul_);
  for (const auto& e : idempotents_)
    if (e.size() != dim_) throw std::invalid_argument("idempotent: dimension mismatch");
}

IdemRing IdemRing::from_algebra(const Algebra& a) {
  return IdemRing(a.structure(), {a.unit()});
}

Vec IdemRing::mul(const Vec& x, const Vec& y) const { return mul_impl(*this, x, y); }

Matrix IdemRing::lmul(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (size_t i = 0; i < dim_; ++i)
    if (x[i] != 0) m = m + lmul_[i] * x[i];
  return m;
}

Matrix IdemRing::rmul(const Vec& y) const {
  Matrix m(dim_, dim_);
  for (size_t j = 0; j < dim_; ++j)
    if (y[j] != 0) m = m + rmul_[j] * y[j];
  return m;
}

Vec IdemRing::unit_sum() const {
  Vec u(dim_, Rat(0));
  for (const auto& e : idempotents_) u = vec_add(u, e);
  return u;
}

size_t ring_dim(const RingDesc& r) {
  return std::visit([](const auto& x) { return x.dim(); }, r);
}

const Matrix& ring_lmul(const RingDesc& r, size_t i) {
  return std::visit([&](const auto& x) -> const Matrix& { return x.lmul_basis(i); }, r);
}

const Matrix& ring_rmul(const RingDesc& r, size_t i) {
  return std::visit([&](const auto& x) -> const Matrix& { return x.rmul_basis(i); }, r);
}

Vec ring_mul(const RingDesc& r, const Vec& x, const Vec& y) {
  return std::visit([&](const auto& a) { return a.mul(x, y); }, r);
}

Vec ring_unit_sum(const RingDesc& r) {
  if (const auto* a = std::get_if<Algebra>(&r)) return a->unit();
  return std::get<IdemRing>(r).unit_sum();
}

ValidationReport check_algebra(const Algebra& a) {
  ValidationReport rep = check_associativity(a);
  const size_t n = a.dim();
  Matrix l = a.lmul(a.unit()), r = a.rmul(a.unit());
  for (size_t i = 0; i < n; ++i) {
    if (l.col(i) != basis_vec(n, i)) rep.fail("left unit law fails at basis vector " + std::to_string(i));
    if (r.col(i) != basis_vec(n, i)) rep.fail("right unit law fails at basis vector " + std::to_string(i));
  }
  return rep;
}

ValidationReport check_idem_ring(const IdemRing& r) {
  ValidationReport rep = check_associativity(r);
  const auto& es = r.idempotents();
  for (size_t p = 0; p < es.size(); ++p)
    for (size_t q = 0; q < es.size(); ++q) {
      Vec prod = r.mul(es[p], es[q]);
      const Vec expect = p == q ? es[p] : vec_zero(r.dim());
      if (prod != expect)
        rep.fail("idempotents " + std::to_string(p) + "," + std::to_string(q) +
                 (p == q ? " not idempotent" : " not orthogonal"));
    }
  return rep;
}

Subspace jacobson_radical(const Algebra& a) { return radical_impl(a); }
Subspace jacobson_radical(const IdemRing& r) { return radical_impl(r); }

}  // namespace qcoring
