#include "qcoring/dual.hpp"

#include <stdexcept>

#include "qcoring/tensor.hpp"

namespace qcoring {

std::vector<Matrix> intertwiners(const std::vector<Matrix>& ap, size_t dp,
                                 const std::vector<Matrix>& aq, size_t dq) {
  // vec(X ap_i - aq_i X) = (I (x) ap_i^T - aq_i (x) I) vec(X), row-major vec.
  const size_t n = dq * dp;
  Matrix sys(ap.size() * n, n);
  const Matrix id_q = Matrix::identity(dq), id_p = Matrix::identity(dp);
  for (size_t i = 0; i < ap.size(); ++i) {
    const Matrix block = kron(id_q, ap[i].transpose()) - kron(aq[i], id_p);
    for (size_t r = 0; r < n; ++r) sys.set_row(i * n + r, block.row(r));
  }
  Subspace ker = kernel_basis(sys);
  std::vector<Matrix> out;
  out.reserve(ker.dim());
  for (size_t r = 0; r < ker.dim(); ++r) out.push_back(unflatten(ker.basis().row(r), dq, dp));
  return out;
}

std::vector<Matrix> hom_right(const RingDesc& a, const RightModule& p, const RightModule& q) {
  return intertwiners(p.action, p.dim, q.action, q.dim);
}

std::vector<Matrix> hom_left(const RingDesc& a, const LeftModule& p, const LeftModule& q) {
  return intertwiners(p.action, p.dim, q.action, q.dim);
}

Vec coords_in_basis(const std::vector<Matrix>& basis, const Matrix& f) {
  if (basis.empty()) {
    if (!f.is_zero()) throw std::invalid_argument("coords_in_basis: not in span");
    return {};
  }
  Matrix cols(basis[0].rows() * basis[0].cols(), basis.size());
  for (size_t k = 0; k < basis.size(); ++k) cols.set_col(k, flatten(basis[k]));
  Matrix rhs(cols.rows(), 1);
  rhs.set_col(0, flatten(f));
  auto sol = solve_right(cols, rhs);
  if (!sol) throw std::invalid_argument("coords_in_basis: not in span");
  return sol->col(0);
}

DualModule dual_module(const Algebra& a, const RightModule& p) {
  ModuleAction t{Algebra::rationals(), {Matrix::identity(p.dim)}};
  return dual_module(a, p, t);
}

DualModule dual_module(const Algebra& a, const RightModule& p, const ModuleAction& t) {
  DualModule d;
  d.functionals = hom_right(RingDesc{a}, p, regular_right_module(a));
  d.dim = d.functionals.size();
  d.bimodule.dim = d.dim;
  for (size_t i = 0; i < a.dim(); ++i) {
    Matrix m(d.dim, d.dim);
    for (size_t k = 0; k < d.dim; ++k)
      m.set_col(k, d.coords_of(a.lmul_basis(i) * d.functionals[k]));
    d.bimodule.left_action.push_back(std::move(m));
  }
  for (size_t j = 0; j < t.maps.size(); ++j) {
    Matrix m(d.dim, d.dim);
    for (size_t k = 0; k < d.dim; ++k)
      m.set_col(k, d.coords_of(d.functionals[k] * t.maps[j]));
    d.bimodule.right_action.push_back(std::move(m));
  }
  return d;
}

std::optional<DualBasis> dual_basis(const Algebra& a, const RightModule& p,
                                    const std::vector<Vec>& generators) {
  const size_t m = generators.size(), da = a.dim();
  RightModule free = direct_sum(std::vector<RightModule>(m, regular_right_module(a)));
  Matrix cover(p.dim, m * da);
  for (size_t i = 0; i < m; ++i)
    for (size_t b = 0; b < da; ++b) cover.set_col(i * da + b, p.action[b].apply(generators[i]));

  std::vector<Matrix> homs = hom_right(RingDesc{a}, p, free);
  if (homs.empty() && p.dim > 0) return std::nullopt;
  Matrix cols(p.dim * p.dim, homs.size());
  for (size_t k = 0; k < homs.size(); ++k) cols.set_col(k, flatten(cover * homs[k]));
  Matrix rhs(cols.rows(), 1);
  rhs.set_col(0, flatten(Matrix::identity(p.dim)));
  auto sol = solve_right(cols, rhs);
  if (!sol) return std::nullopt;

  Matrix section(m * da, p.dim);
  for (size_t k = 0; k < homs.size(); ++k) {
    const Rat& c = sol->operator()(k, 0);
    if (c != 0) section = section + homs[k] * c;
  }

  DualBasis db;
  db.elements = generators;
  for (size_t i = 0; i < m; ++i) {
    Matrix f(da, p.dim);
    for (size_t r = 0; r < da; ++r) f.set_row(r, section.row(i * da + r));
    db.functionals.push_back(std::move(f));
  }
  return db;
}

std::optional<DualBasis> dual_basis(const Algebra& a, const RightModule& p) {
  std::vector<Vec> gens;
  for (size_t c = 0; c < p.dim; ++c) gens.push_back(basis_vec(p.dim, c));
  return dual_basis(a, p, gens);
}

ValidationReport verify_dual_basis(const Algebra& a, const RightModule& p, const DualBasis& db) {
  ValidationReport rep;
  if (db.elements.size() != db.functionals.size()) {
    rep.fail("element and functional counts differ");
    return rep;
  }
  for (size_t i = 0; i < db.functionals.size(); ++i) {
    const Matrix& f = db.functionals[i];
    if (f.rows() != a.dim() || f.cols() != p.dim) {
      rep.fail("functional " + std::to_string(i) + " has wrong shape");
      continue;
    }
    for (size_t b = 0; b < a.dim(); ++b)
      if (f * p.action[b] != a.rmul_basis(b) * f)
        rep.fail("functional " + std::to_string(i) + " is not right-linear at basis " +
                 std::to_string(b));
  }
  if (!rep.ok()) return rep;
  for (size_t c = 0; c < p.dim; ++c) {
    Vec got = vec_zero(p.dim);
    for (size_t i = 0; i < db.elements.size(); ++i)
      got = vec_add(got, act(p.action, db.functionals[i].col(c)).apply(db.elements[i]));
    if (got != basis_vec(p.dim, c))
      rep.fail("sum e_i * e*_i(p) misses basis vector " + std::to_string(c));
  }
  return rep;
}

EndRing ring_from_endo_basis(std::vector<Matrix> basis, size_t dim) {
  EndRing e;
  e.basis = std::move(basis);
  const size_t n = e.basis.size();
  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      structure[i][j] = coords_in_basis(e.basis, e.basis[i] * e.basis[j]);
  Vec unit = coords_in_basis(e.basis, Matrix::identity(dim));
  e.ring = Algebra(std::move(structure), std::move(unit));
  e.action.ring = e.ring;
  e.action.maps = e.basis;
  return e;
}

EndRing end_ring(const RingDesc& a, const RightModule& p) {
  return ring_from_endo_basis(intertwiners(p.action, p.dim, p.action, p.dim), p.dim);
}

FlatnessReport is_faithfully_flat(const RingDesc& r, const LeftModule& f) {
  const size_t dr = ring_dim(r);
  const Vec u = ring_unit_sum(r);
  Matrix lu(dr, dr), ru(dr, dr);
  for (size_t i = 0; i < dr; ++i) {
    lu.set_col(i, ring_mul(r, u, basis_vec(dr, i)));
    ru.set_col(i, ring_mul(r, basis_vec(dr, i), u));
  }
  if (lu != Matrix::identity(dr) || ru != Matrix::identity(dr))
    throw std::invalid_argument("is_faithfully_flat: idempotent sum is not a unit of the ring");
  if (act(f.action, u) != Matrix::identity(f.dim))
    throw std::invalid_argument("is_faithfully_flat: module is not unital");

  FlatnessReport rep;

  // Projectivity: split the free cover on the coordinate basis.
  LeftModule free;
  free.dim = f.dim * dr;
  const Matrix id_n = Matrix::identity(f.dim);
  for (size_t i = 0; i < dr; ++i) free.action.push_back(kron(id_n, ring_lmul(r, i)));
  Matrix cover(f.dim, f.dim * dr);
  for (size_t c = 0; c < f.dim; ++c)
    for (size_t b = 0; b < dr; ++b) cover.set_col(c * dr + b, f.action[b].col(c));
  std::vector<Matrix> homs = hom_left(r, f, free);
  Matrix cols(f.dim * f.dim, homs.size());
  for (size_t k = 0; k < homs.size(); ++k) cols.set_col(k, flatten(cover * homs[k]));
  Matrix rhs(cols.rows(), 1);
  rhs.set_col(0, flatten(Matrix::identity(f.dim)));
  rep.projective = solve_right(cols, rhs).has_value();

  // Faithfulness: the annihilator of f / rad(r)f must be exactly rad(r).
  Subspace rad = std::visit([](const auto& ring) { return jacobson_radical(ring); }, r);
  SpanBuilder radf(f.dim);
  for (size_t t = 0; t < rad.dim(); ++t) {
    const Matrix m = act(f.action, rad.basis().row(t));
    for (size_t c = 0; c < f.dim; ++c) radf.insert(m.col(c));
  }
  QuotientSpace q = quotient_space(f.dim, radf.subspace());
  Matrix annsys(q.dim() * f.dim, dr);
  for (size_t i = 0; i < dr; ++i) annsys.set_col(i, flatten(q.projection * f.action[i]));
  rep.faithful = (kernel_basis(annsys) == rad);

  return rep;
}

}  // namespace qcoring
