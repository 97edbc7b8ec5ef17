#include "qcoring/comatrix.hpp"

#include <stdexcept>
#include <string>

namespace qcoring {

namespace {

// ambient vector of u (x) v with the row-major pairing (i, j) -> i * |v| + j
Vec outer_ambient(const Vec& u, const Vec& v) {
  Vec w = vec_zero(u.size() * v.size());
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) w[i * v.size() + j] = u[i] * v[j];
  }
  return w;
}

void copy_block(Matrix& dst, const Matrix& src, size_t roff, size_t coff) {
  for (size_t r = 0; r < src.rows(); ++r)
    for (size_t c = 0; c < src.cols(); ++c)
      if (src(r, c) != 0) dst(roff + r, coff + c) = src(r, c);
}

// comultiplication and counit of P* (x)_T P on its canonical coordinates; the
// comultiplication column is delivered in the ambient of the square
struct BlockStructure {
  Matrix delta_ambient;  // block^2 ambient x block
  Matrix counit;         // a.dim x block
};

BlockStructure block_structure(const Algebra& a, const RightModule& p, const DualBasis& db,
                               const DualModule& dual, const BalancedTensor& product) {
  const size_t dp = p.dim, dd = dual.dim, bd = product.dim();
  const size_t na = db.elements.size();

  std::vector<Vec> wcoords(na);
  for (size_t al = 0; al < na; ++al) wcoords[al] = dual.coords_of(db.functionals[al]);

  // classes of phi_k (x) e_a and of e*_a (x) e_c
  std::vector<std::vector<Vec>> left_class(dd, std::vector<Vec>(na));
  std::vector<std::vector<Vec>> right_class(na, std::vector<Vec>(dp));
  for (size_t k = 0; k < dd; ++k)
    for (size_t al = 0; al < na; ++al)
      left_class[k][al] =
          product.space.projection.apply(outer_ambient(basis_vec(dd, k), db.elements[al]));
  for (size_t al = 0; al < na; ++al)
    for (size_t c = 0; c < dp; ++c)
      right_class[al][c] =
          product.space.projection.apply(outer_ambient(wcoords[al], basis_vec(dp, c)));

  BlockStructure out;
  out.delta_ambient = Matrix(bd * bd, bd);
  for (size_t u = 0; u < bd; ++u) {
    const Vec lift = product.space.section.col(u);
    Vec col = vec_zero(bd * bd);
    for (size_t k = 0; k < dd; ++k)
      for (size_t c = 0; c < dp; ++c) {
        const Rat& coeff = lift[k * dp + c];
        if (coeff == 0) continue;
        for (size_t al = 0; al < na; ++al)
          col = vec_add(col,
                        vec_scale(coeff, outer_ambient(left_class[k][al], right_class[al][c])));
      }
    out.delta_ambient.set_col(u, col);
  }

  Matrix counit_amb(a.dim(), dd * dp);
  for (size_t k = 0; k < dd; ++k)
    for (size_t c = 0; c < dp; ++c) counit_amb.set_col(k * dp + c, dual.functionals[k].col(c));
  out.counit = counit_amb * product.space.section;
  return out;
}

ValidationReport check_coring_morphism(const Coring& src, const Coring& dst, const Matrix& g,
                                       const std::string& name) {
  ValidationReport rep;
  if (g.rows() != dst.dim() || g.cols() != src.dim()) {
    rep.fail(name + ": shape mismatch");
    return rep;
  }
  for (size_t i = 0; i < src.algebra.dim(); ++i) {
    if (g * src.bimodule.left_action[i] != dst.bimodule.left_action[i] * g)
      rep.fail(name + " is not left-linear at algebra basis " + std::to_string(i));
    if (g * src.bimodule.right_action[i] != dst.bimodule.right_action[i] * g)
      rep.fail(name + " is not right-linear at algebra basis " + std::to_string(i));
  }
  const Matrix lhs = dst.delta * g;
  const Matrix rhs =
      dst.square.space.projection * kron_apply(g, g, src.square.space.section * src.delta);
  if (lhs != rhs) rep.fail(name + " does not intertwine the comultiplications");
  if (dst.counit * g != src.counit) rep.fail(name + " does not intertwine the counits");
  return rep;
}

}  // namespace

ComatrixCoring comatrix_coring(const Algebra& a, const RightModule& p, const DualBasis& db,
                               const EndRing& middle) {
  ComatrixCoring c;
  c.module = p;
  c.basis = db;
  c.middle = middle;
  c.dual = dual_module(a, p, middle.action);
  Bimodule p_ta{p.dim, middle.basis, p.action};
  c.product = tensor_over(c.dual.bimodule, RingDesc{middle.ring}, p_ta);
  BlockStructure s = block_structure(a, p, db, c.dual, c.product);
  c.coring = make_coring(a, c.product.outer, s.delta_ambient, s.counit);
  return c;
}

ComatrixCoring comatrix_coring(const Algebra& a, const RightModule& p, const DualBasis& db) {
  return comatrix_coring(a, p, db, end_ring(RingDesc{a}, p));
}

ComatrixCoring comatrix_coring(const Algebra& a, const RightModule& p) {
  auto db = dual_basis(a, p);
  if (!db) throw std::invalid_argument("comatrix_coring: module has no finite dual basis");
  return comatrix_coring(a, p, *db);
}

Comodule comatrix_comodule(const ComatrixCoring& c) {
  const size_t dp = c.module.dim, cd = c.coring.dim();
  Matrix amb(dp * cd, dp);
  for (size_t col = 0; col < dp; ++col) {
    Vec v = vec_zero(dp * cd);
    for (size_t al = 0; al < c.basis.elements.size(); ++al) {
      const Vec cls = c.product.space.projection.apply(
          outer_ambient(c.dual.coords_of(c.basis.functionals[al]), basis_vec(dp, col)));
      const Vec& e = c.basis.elements[al];
      for (size_t r = 0; r < dp; ++r) {
        if (e[r] == 0) continue;
        for (size_t u = 0; u < cd; ++u)
          if (cls[u] != 0) v[r * cd + u] = v[r * cd + u] + e[r] * cls[u];
      }
    }
    amb.set_col(col, v);
  }
  return make_comodule(c.coring, c.module, amb);
}

Comodule direct_sum_comodule(const Coring& c, const std::vector<Comodule>& members) {
  const size_t dc = c.dim();
  std::vector<size_t> dims;
  std::vector<RightModule> mods;
  for (const auto& m : members) {
    dims.push_back(m.module.dim);
    mods.push_back(m.module);
  }
  DirectSum layout = direct_sum_layout(dims);
  RightModule sum = direct_sum(mods);
  Matrix amb(layout.total * dc, layout.total);
  for (size_t p = 0; p < members.size(); ++p) {
    const Matrix lift = members[p].product.space.section * members[p].coaction;
    const size_t off = layout.offset(p);
    for (size_t col = 0; col < dims[p]; ++col)
      for (size_t r = 0; r < dims[p]; ++r)
        for (size_t t = 0; t < dc; ++t) {
          const Rat& x = lift(r * dc + t, col);
          if (x != 0) amb((off + r) * dc + t, off + col) = x;
        }
  }
  return make_comodule(c, sum, amb);
}

Vec MatrixHomRing::coords_of(size_t p, size_t q, const Matrix& t) const {
  const Vec local = coords_in_basis(homs[p][q], t);
  Vec out = vec_zero(layout.total);
  const size_t off = layout.offset(pair_block(p, q));
  for (size_t i = 0; i < local.size(); ++i) out[off + i] = local[i];
  return out;
}

MatrixHomRing hom_ring(const Coring& c, const std::vector<Comodule>& members) {
  MatrixHomRing r;
  r.count = members.size();
  r.homs.assign(r.count, std::vector<std::vector<Matrix>>(r.count));
  std::vector<size_t> dims(r.count * r.count);
  for (size_t p = 0; p < r.count; ++p)
    for (size_t q = 0; q < r.count; ++q) {
      r.homs[p][q] = comodule_hom(c, members[p], members[q]);
      dims[r.pair_block(p, q)] = r.homs[p][q].size();
    }
  r.layout = direct_sum_layout(dims);
  const size_t n = r.layout.total;

  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n, vec_zero(n)));
  for (size_t p = 0; p < r.count; ++p)
    for (size_t q = 0; q < r.count; ++q)
      for (size_t i = 0; i < r.homs[p][q].size(); ++i) {
        const size_t gi = r.layout.offset(r.pair_block(p, q)) + i;
        // e_gi e_gj composes gi after gj, nonzero only when the objects chain
        for (size_t p2 = 0; p2 < r.count; ++p2)
          for (size_t j = 0; j < r.homs[p2][p].size(); ++j) {
            const size_t gj = r.layout.offset(r.pair_block(p2, p)) + j;
            structure[gi][gj] = r.coords_of(p2, q, r.homs[p][q][i] * r.homs[p2][p][j]);
          }
      }

  std::vector<Vec> idems;
  for (size_t p = 0; p < r.count; ++p)
    idems.push_back(r.coords_of(p, p, Matrix::identity(members[p].module.dim)));
  r.ring = IdemRing(std::move(structure), std::move(idems));
  return r;
}

FamilyAnalysis analyze_family(const Coring& c, const std::vector<Comodule>& members) {
  if (members.empty()) throw std::invalid_argument("analyze_family: empty family");
  FamilyAnalysis f;
  f.base = c;
  f.members = members;
  const Algebra& a = c.algebra;
  const size_t count = members.size(), da = a.dim();

  std::vector<size_t> block_dims, mod_dims, dual_dims;
  std::vector<RightModule> mods;
  for (size_t p = 0; p < count; ++p) {
    const RightModule& m = members[p].module;
    auto db = dual_basis(a, m);
    if (!db)
      throw std::invalid_argument("analyze_family: member " + std::to_string(p) +
                                  " has no finite dual basis");
    f.bases.push_back(*db);
    f.endos.push_back(ring_from_endo_basis(comodule_hom(c, members[p], members[p]), m.dim));
    f.duals.push_back(dual_module(a, m, f.endos[p].action));
    Bimodule m_ta{m.dim, f.endos[p].basis, m.action};
    f.blocks.push_back(tensor_over(f.duals[p].bimodule, RingDesc{f.endos[p].ring}, m_ta));
    block_dims.push_back(f.blocks[p].dim());
    mod_dims.push_back(m.dim);
    dual_dims.push_back(f.duals[p].dim);
    mods.push_back(m);
  }
  f.block_layout = direct_sum_layout(block_dims);
  const size_t big = f.block_layout.total;

  // coproduct of the per-member comatrix corings
  Bimodule cop{big, std::vector<Matrix>(da, Matrix(big, big)),
               std::vector<Matrix>(da, Matrix(big, big))};
  Matrix cop_delta_amb(big * big, big);
  Matrix cop_counit(da, big);
  for (size_t p = 0; p < count; ++p) {
    const size_t off = f.block_layout.offset(p), bd = block_dims[p];
    for (size_t i = 0; i < da; ++i) {
      copy_block(cop.left_action[i], f.blocks[p].outer.left_action[i], off, off);
      copy_block(cop.right_action[i], f.blocks[p].outer.right_action[i], off, off);
    }
    BlockStructure s = block_structure(a, members[p].module, f.bases[p], f.duals[p], f.blocks[p]);
    for (size_t u = 0; u < bd; ++u)
      for (size_t i = 0; i < bd; ++i)
        for (size_t j = 0; j < bd; ++j) {
          const Rat& x = s.delta_ambient(i * bd + j, u);
          if (x != 0) cop_delta_amb((off + i) * big + (off + j), off + u) = x;
        }
    for (size_t u = 0; u < bd; ++u) cop_counit.set_col(off + u, s.counit.col(u));
  }
  f.coproduct = make_coring(a, cop, cop_delta_amb, cop_counit);

  f.homring = hom_ring(c, members);

  // relation subspace: phi (x) t(x) in the block of the target matches
  // (phi o t) (x) x in the block of the source
  SpanBuilder ideal(big);
  for (size_t p = 0; p < count; ++p)
    for (size_t q = 0; q < count; ++q)
      for (const Matrix& t : f.homring.homs[p][q])
        for (size_t k = 0; k < dual_dims[q]; ++k) {
          const Vec w = f.duals[p].coords_of(f.duals[q].functionals[k] * t);
          for (size_t cidx = 0; cidx < mod_dims[p]; ++cidx) {
            const Vec v1 = f.blocks[q].space.projection.apply(
                outer_ambient(basis_vec(dual_dims[q], k), t.col(cidx)));
            const Vec v2 = f.blocks[p].space.projection.apply(
                outer_ambient(w, basis_vec(mod_dims[p], cidx)));
            Vec rel = vec_zero(big);
            const size_t offq = f.block_layout.offset(q), offp = f.block_layout.offset(p);
            for (size_t u = 0; u < v1.size(); ++u) rel[offq + u] = v1[u];
            for (size_t u = 0; u < v2.size(); ++u) rel[offp + u] = rel[offp + u] - v2[u];
            ideal.insert(std::move(rel));
          }
        }
  f.coideal = ideal.subspace();
  f.quotient_map = quotient_space(big, f.coideal);

  const size_t qd = f.quotient_map.dim();
  Bimodule qbim{qd, {}, {}};
  for (size_t i = 0; i < da; ++i) {
    qbim.left_action.push_back(f.quotient_map.projection * cop.left_action[i] *
                               f.quotient_map.section);
    qbim.right_action.push_back(f.quotient_map.projection * cop.right_action[i] *
                                f.quotient_map.section);
  }
  const Matrix qdelta_amb =
      kron_apply(f.quotient_map.projection, f.quotient_map.projection,
                 f.coproduct.square.space.section * f.coproduct.delta * f.quotient_map.section);
  f.quotient = make_coring(a, qbim, qdelta_amb, cop_counit * f.quotient_map.section);

  // certificates that the relation subspace is a coideal
  ValidationReport& cert = f.coideal_certificates;
  const Matrix jt = f.coideal.basis().transpose();
  if (!(cop_counit * jt).is_zero()) cert.fail("counit does not vanish on the relation space");
  for (size_t i = 0; i < da; ++i)
    for (size_t r = 0; r < f.coideal.dim(); ++r) {
      if (!f.coideal.contains(cop.left_action[i].apply(f.coideal.basis().row(r))))
        cert.fail("relation space is not a left submodule at algebra basis " + std::to_string(i));
      if (!f.coideal.contains(cop.right_action[i].apply(f.coideal.basis().row(r))))
        cert.fail("relation space is not a right submodule at algebra basis " + std::to_string(i));
    }
  const Matrix dj = f.quotient.square.space.projection *
                    kron_apply(f.quotient_map.projection, f.quotient_map.projection,
                               f.coproduct.square.space.section * f.coproduct.delta * jt);
  if (!dj.is_zero()) cert.fail("comultiplication does not descend past the relation space");

  // Sigma, its dual sum, and the two module structures over the hom ring
  f.sigma_layout = direct_sum_layout(mod_dims);
  f.dagger_layout = direct_sum_layout(dual_dims);
  f.sigma = direct_sum(mods);
  f.sigma_comodule = direct_sum_comodule(c, members);
  const size_t sd = f.sigma_layout.total, dd = f.dagger_layout.total;

  f.sigma_ra.dim = sd;
  for (size_t p = 0; p < count; ++p)
    for (size_t q = 0; q < count; ++q)
      for (const Matrix& t : f.homring.homs[p][q])
        f.sigma_ra.left_action.push_back(f.sigma_layout.inject(q, mod_dims[q]) * t *
                                         f.sigma_layout.project(p, mod_dims[p]));
  f.sigma_ra.right_action = f.sigma.action;

  f.dagger_ar.dim = dd;
  for (size_t i = 0; i < da; ++i) {
    Matrix m(dd, dd);
    for (size_t p = 0; p < count; ++p)
      copy_block(m, f.duals[p].bimodule.left_action[i], f.dagger_layout.offset(p),
                 f.dagger_layout.offset(p));
    f.dagger_ar.left_action.push_back(std::move(m));
  }
  for (size_t p = 0; p < count; ++p)
    for (size_t q = 0; q < count; ++q)
      for (const Matrix& t : f.homring.homs[p][q]) {
        Matrix comp(dual_dims[p], dual_dims[q]);
        for (size_t k = 0; k < dual_dims[q]; ++k)
          comp.set_col(k, f.duals[p].coords_of(f.duals[q].functionals[k] * t));
        f.dagger_ar.right_action.push_back(f.dagger_layout.inject(p, dual_dims[p]) * comp *
                                           f.dagger_layout.project(q, dual_dims[q]));
      }

  for (size_t q = 0; q < count; ++q)
    for (size_t k = 0; k < dual_dims[q]; ++k)
      f.dagger_functionals.push_back(f.duals[q].functionals[k] *
                                     f.sigma_layout.project(q, mod_dims[q]));

  f.middle_product = tensor_over(f.dagger_ar, RingDesc{f.homring.ring}, f.sigma_ra);
  const size_t mid = f.middle_product.dim();

  f.gamma1 = Matrix(mid, big);
  for (size_t p = 0; p < count; ++p) {
    const size_t off = f.block_layout.offset(p);
    for (size_t u = 0; u < block_dims[p]; ++u) {
      const Vec lift = f.blocks[p].space.section.col(u);
      Vec amb = vec_zero(dd * sd);
      for (size_t k = 0; k < dual_dims[p]; ++k)
        for (size_t cidx = 0; cidx < mod_dims[p]; ++cidx) {
          const Rat& x = lift[k * mod_dims[p] + cidx];
          if (x != 0)
            amb[(f.dagger_layout.offset(p) + k) * sd + (f.sigma_layout.offset(p) + cidx)] = x;
        }
      f.gamma1.set_col(off + u, f.middle_product.space.projection.apply(amb));
    }
  }

  f.gamma1_bar = f.gamma1 * f.quotient_map.section;
  std::optional<Matrix> ginv;
  if (f.gamma1_bar.rows() == f.gamma1_bar.cols())
    ginv = solve_right(f.gamma1_bar, Matrix::identity(mid));
  if (!ginv || f.gamma1_bar * *ginv != Matrix::identity(mid) ||
      *ginv * f.gamma1_bar != Matrix::identity(qd))
    throw std::logic_error(
        "analyze_family: quotient does not map bijectively onto the relative tensor product");

  // transport the quotient structure onto Sigma-dagger (x)_R Sigma
  const Matrix mid_delta_amb = kron_apply(
      f.gamma1_bar, f.gamma1_bar, f.quotient.square.space.section * f.quotient.delta * *ginv);
  f.middle = make_coring(a, f.middle_product.outer, mid_delta_amb, f.quotient.counit * *ginv);

  f.sigma_endos = ring_from_endo_basis(comodule_hom(c, f.sigma_comodule, f.sigma_comodule), sd);
  auto sdb = dual_basis(a, f.sigma);
  if (!sdb) throw std::logic_error("analyze_family: sum of the members has no dual basis");
  f.sigma_comatrix = comatrix_coring(a, f.sigma, *sdb, f.sigma_endos);

  // extend along the inclusion of the dual sum into the full dual of Sigma
  Matrix embed_dual(f.sigma_comatrix.dual.dim, dd);
  for (size_t k = 0; k < dd; ++k)
    embed_dual.set_col(k, f.sigma_comatrix.dual.coords_of(f.dagger_functionals[k]));
  f.gamma2 = f.sigma_comatrix.product.space.projection *
             kron_apply(embed_dual, Matrix::identity(sd), f.middle_product.space.section);
  f.gamma_full = f.gamma2 * f.gamma1_bar;
  return f;
}

ValidationReport check_triangle(const FamilyAnalysis& f) {
  ValidationReport rep;
  if (kernel_basis(f.gamma1) != f.coideal)
    rep.fail("kernel of the blockwise comparison differs from the relation space");
  const size_t mid = f.middle_product.dim();
  if (rank(f.gamma1) != mid) rep.fail("blockwise comparison is not surjective");
  if (f.quotient.dim() != mid) rep.fail("quotient and relative tensor product dimensions differ");
  if (f.sigma_comatrix.coring.dim() != mid)
    rep.fail("comatrix coring of the sum has a different dimension");
  if (!rep.ok()) return rep;
  if (rank(f.gamma1_bar) != mid) rep.fail("induced map on the quotient is not bijective");
  if (rank(f.gamma2) != mid) rep.fail("extension to the full dual is not bijective");
  if (rank(f.gamma_full) != mid) rep.fail("composite comparison is not bijective");
  rep.merge(check_coring_morphism(f.quotient, f.middle, f.gamma1_bar, "induced map"), "");
  rep.merge(
      check_coring_morphism(f.middle, f.sigma_comatrix.coring, f.gamma2, "dual extension"), "");
  rep.merge(
      check_coring_morphism(f.quotient, f.sigma_comatrix.coring, f.gamma_full, "composite"), "");
  return rep;
}

Matrix canonical_matrix(const Coring& c, const std::vector<Matrix>& functionals,
                        const Comodule& sigma, const BalancedTensor& product) {
  const size_t dc = c.dim(), sd = sigma.module.dim, nf = functionals.size();
  const Matrix lift = sigma.product.space.section * sigma.coaction;
  Matrix amb(dc, nf * sd);
  for (size_t k = 0; k < nf; ++k) {
    std::vector<Matrix> lm(sd);
    for (size_t r = 0; r < sd; ++r) lm[r] = act(c.bimodule.left_action, functionals[k].col(r));
    for (size_t u = 0; u < sd; ++u) {
      Vec v = vec_zero(dc);
      for (size_t r = 0; r < sd; ++r)
        for (size_t t = 0; t < dc; ++t) {
          const Rat& x = lift(r * dc + t, u);
          if (x != 0) v = vec_add(v, vec_scale(x, lm[r].col(t)));
        }
      amb.set_col(k * sd + u, v);
    }
  }
  return amb * product.space.section;
}

CanReport canonical_map(const FamilyAnalysis& f) {
  CanReport r;
  r.matrix = canonical_matrix(f.base, f.sigma_comatrix.dual.functionals, f.sigma_comodule,
                              f.sigma_comatrix.product);
  r.rank = rank(r.matrix);
  r.codomain_dim = f.base.dim();
  r.bijective = r.rank == r.codomain_dim && f.sigma_comatrix.coring.dim() == r.codomain_dim;
  return r;
}

std::vector<Comodule> grouplike_members(const Coring& c, const std::vector<Vec>& gs) {
  std::vector<Comodule> out;
  for (const Vec& g : gs) out.push_back(comodule_from_grouplike(c, g));
  return out;
}

Subspace grouplike_reachable_span(const Coring& c, const std::vector<Vec>& gs) {
  SpanBuilder sb(c.dim());
  const size_t da = c.algebra.dim();
  for (const Vec& g : gs)
    for (size_t j = 0; j < da; ++j) {
      const Vec gj = c.bimodule.right_action[j].apply(g);
      for (size_t i = 0; i < da; ++i) sb.insert(c.bimodule.left_action[i].apply(gj));
    }
  return sb.subspace();
}

ValidationReport check_grouplike_display(const FamilyAnalysis& f, const std::vector<Vec>& gs) {
  ValidationReport rep;
  if (gs.size() != f.members.size()) {
    rep.fail("grouplike count differs from the family size");
    return rep;
  }
  const Algebra& a = f.base.algebra;
  const size_t da = a.dim(), mid = f.middle.dim(), sd = f.sigma_layout.total,
               dd = f.dagger_layout.total;
  for (size_t g = 0; g < gs.size(); ++g)
    if (f.members[g].module.dim != da) {
      rep.fail("member " + std::to_string(g) + " is not the regular module");
      return rep;
    }

  auto theta = [&](size_t g, const Vec& x, const Vec& y) {
    const Vec w = f.duals[g].coords_of(a.lmul(x));
    Vec amb = vec_zero(dd * sd);
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k] == 0) continue;
      for (size_t cidx = 0; cidx < y.size(); ++cidx)
        if (y[cidx] != 0)
          amb[(f.dagger_layout.offset(g) + k) * sd + (f.sigma_layout.offset(g) + cidx)] =
              w[k] * y[cidx];
    }
    return f.middle_product.space.projection.apply(amb);
  };

  SpanBuilder span(mid);
  for (size_t g = 0; g < gs.size(); ++g)
    for (size_t i = 0; i < da; ++i)
      for (size_t j = 0; j < da; ++j) {
        const Vec ei = basis_vec(da, i), ej = basis_vec(da, j);
        const Vec cls = theta(g, ei, ej);
        span.insert(cls);
        if (f.middle.counit.apply(cls) != a.mul(ei, ej))
          rep.fail("counit misses the product at grouplike " + std::to_string(g) + ", pair (" +
                   std::to_string(i) + ", " + std::to_string(j) + ")");
        const Vec left = theta(g, ei, a.unit()), right = theta(g, a.unit(), ej);
        if (f.middle.delta.apply(cls) !=
            f.middle.square.space.projection.apply(outer_ambient(left, right)))
          rep.fail("comultiplication misses the split at grouplike " + std::to_string(g) +
                   ", pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
  if (span.dim() != mid) rep.fail("grouplike classes do not fill the quotient");
  return rep;
}

ValidationReport check_grouplike_hom_ring(const Coring& c, const std::vector<Vec>& gs) {
  ValidationReport rep;
  const Algebra& a = c.algebra;
  const std::vector<Comodule> mem = grouplike_members(c, gs);
  const size_t n = gs.size();
  std::vector<std::vector<std::vector<Matrix>>> homs(n, std::vector<std::vector<Matrix>>(n));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) homs[p][q] = comodule_hom(c, mem[p], mem[q]);

  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      const Subspace space = grouplike_hom_space(c, gs[p], gs[q]);
      const std::string at = " at pair (" + std::to_string(p) + ", " + std::to_string(q) + ")";
      if (homs[p][q].size() != space.dim()) {
        rep.fail("hom dimension differs from the intertwining elements" + at);
        continue;
      }
      for (const Matrix& t : homs[p][q]) {
        const Vec t1 = t.apply(a.unit());
        if (!space.contains(t1)) rep.fail("value at the unit leaves the intertwining space" + at);
        if (t != a.lmul(t1))
          rep.fail("map is not left multiplication by its value at the unit" + at);
      }
    }

  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r)
        for (const Matrix& t : homs[q][r])
          for (const Matrix& t2 : homs[p][q])
            if ((t * t2).apply(a.unit()) != a.mul(t.apply(a.unit()), t2.apply(a.unit())))
              rep.fail("composition does not multiply the representing elements at (" +
                       std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(r) +
                       ")");
  return rep;
}

ValidationReport check_s_ring(const FamilyAnalysis& f) {
  ValidationReport rep;
  const Algebra& a = f.base.algebra;
  const size_t sd = f.sigma_layout.total, dd = f.dagger_layout.total;

  Bimodule dagger_a{dd, f.dagger_ar.left_action, {Matrix::identity(dd)}};
  BalancedTensor s = tensor_over(as_bimodule_right(f.sigma), RingDesc{a}, dagger_a);

  // right action of phi_k(e_u) on Sigma, for every dagger functional and column
  std::vector<std::vector<Matrix>> moved(dd, std::vector<Matrix>(sd));
  for (size_t k = 0; k < dd; ++k)
    for (size_t u = 0; u < sd; ++u)
      moved[k][u] = act(f.sigma.action, f.dagger_functionals[k].col(u));

  // nu(q (x) phi) = q phi(-) as a matrix on Sigma
  Matrix nu_amb(sd * sd, sd * dd);
  for (size_t u = 0; u < sd; ++u)
    for (size_t k = 0; k < dd; ++k) {
      Matrix m(sd, sd);
      for (size_t r = 0; r < sd; ++r) m.set_col(r, moved[k][r].col(u));
      nu_amb.set_col(u * dd + k, flatten(m));
    }

  for (size_t r = 0; r < s.space.kernel.dim(); ++r)
    if (!vec_is_zero(nu_amb.apply(s.space.kernel.basis().row(r))))
      rep.fail("evaluation does not kill relation " + std::to_string(r));

  const Matrix nu = nu_amb * s.space.section;
  const EndRing ends = end_ring(RingDesc{a}, f.sigma);
  if (s.dim() != ends.basis.size() || rank(nu) != s.dim()) {
    rep.fail("evaluation is not bijective onto the endomorphism ring");
  } else {
    SpanBuilder img(sd * sd);
    for (size_t c2 = 0; c2 < nu.cols(); ++c2) img.insert(nu.col(c2));
    for (const Matrix& b : ends.basis)
      if (!img.member(flatten(b))) {
        rep.fail("evaluation misses part of the endomorphism ring");
        break;
      }
  }
  if (!rep.ok()) return rep;

  // multiplicativity on ambient representatives
  std::vector<Matrix> nmat(sd * dd);
  for (size_t i = 0; i < sd * dd; ++i) nmat[i] = unflatten(nu_amb.col(i), sd, sd);
  for (size_t u = 0; u < sd; ++u)
    for (size_t k = 0; k < dd; ++k)
      for (size_t u2 = 0; u2 < sd; ++u2)
        for (size_t k2 = 0; k2 < dd; ++k2) {
          // (e_u (x) phi_k)(e_u2 (x) phi_k2) = e_u phi_k(e_u2) (x) phi_k2
          const Vec shifted = moved[k][u2].col(u);
          Vec prod_amb = vec_zero(sd * dd);
          for (size_t r = 0; r < sd; ++r)
            if (shifted[r] != 0) prod_amb[r * dd + k2] = shifted[r];
          if (nu_amb.apply(prod_amb) != flatten(nmat[u * dd + k] * nmat[u2 * dd + k2]))
            rep.fail("product mismatch at (" + std::to_string(u) + ", " + std::to_string(k) +
                     ") x (" + std::to_string(u2) + ", " + std::to_string(k2) + ")");
        }

  // the dual bases of the members sum to the unit
  Vec unit_amb = vec_zero(sd * dd);
  for (size_t p = 0; p < f.members.size(); ++p)
    for (size_t al = 0; al < f.bases[p].elements.size(); ++al) {
      const Vec w = f.duals[p].coords_of(f.bases[p].functionals[al]);
      const Vec& e = f.bases[p].elements[al];
      for (size_t r = 0; r < e.size(); ++r) {
        if (e[r] == 0) continue;
        for (size_t m2 = 0; m2 < w.size(); ++m2)
          if (w[m2] != 0) {
            const size_t idx =
                (f.sigma_layout.offset(p) + r) * dd + (f.dagger_layout.offset(p) + m2);
            unit_amb[idx] = unit_amb[idx] + e[r] * w[m2];
          }
      }
    }
  if (nu_amb.apply(unit_amb) != flatten(Matrix::identity(sd)))
    rep.fail("dual basis sum is not the unit");
  return rep;
}

Comodule member_over_middle(const FamilyAnalysis& f, size_t p) {
  const size_t mid = f.middle.dim(), dm = f.members[p].module.dim, sd = f.sigma_layout.total,
               dd = f.dagger_layout.total;
  Matrix amb(dm * mid, dm);
  for (size_t cidx = 0; cidx < dm; ++cidx) {
    Vec v = vec_zero(dm * mid);
    for (size_t al = 0; al < f.bases[p].elements.size(); ++al) {
      const Vec w = f.duals[p].coords_of(f.bases[p].functionals[al]);
      Vec pair = vec_zero(dd * sd);
      for (size_t m2 = 0; m2 < w.size(); ++m2)
        if (w[m2] != 0)
          pair[(f.dagger_layout.offset(p) + m2) * sd + (f.sigma_layout.offset(p) + cidx)] = w[m2];
      const Vec cls = f.middle_product.space.projection.apply(pair);
      const Vec& e = f.bases[p].elements[al];
      for (size_t r = 0; r < dm; ++r) {
        if (e[r] == 0) continue;
        for (size_t u = 0; u < mid; ++u)
          if (cls[u] != 0) v[r * mid + u] = v[r * mid + u] + e[r] * cls[u];
      }
    }
    amb.set_col(cidx, v);
  }
  return make_comodule(f.middle, f.members[p].module, amb);
}

MiddleDescent middle_descent(const FamilyAnalysis& f) {
  MiddleDescent d;
  const size_t count = f.members.size();
  std::vector<Comodule> over_mid;
  for (size_t p = 0; p < count; ++p) over_mid.push_back(member_over_middle(f, p));
  d.barring = hom_ring(f.middle, over_mid);

  d.lambda_defined = true;
  d.lambda_bijective = true;
  for (size_t p = 0; p < count; ++p)
    for (size_t q = 0; q < count; ++q) {
      for (const Matrix& t : f.homring.homs[p][q]) {
        try {
          coords_in_basis(d.barring.homs[p][q], t);
        } catch (const std::invalid_argument&) {
          d.lambda_defined = false;
        }
      }
      if (f.homring.homs[p][q].size() != d.barring.homs[p][q].size()) d.lambda_bijective = false;
    }
  if (!d.lambda_defined) d.lambda_bijective = false;

  // the canonical map of the family over its own quotient coring
  Bimodule sigma_rbar{f.sigma_layout.total, {}, f.sigma.action};
  Bimodule dagger_rbar{f.dagger_layout.total, f.dagger_ar.left_action, {}};
  for (size_t p = 0; p < count; ++p)
    for (size_t q = 0; q < count; ++q)
      for (const Matrix& t : d.barring.homs[p][q]) {
        sigma_rbar.left_action.push_back(f.sigma_layout.inject(q, f.members[q].module.dim) * t *
                                         f.sigma_layout.project(p, f.members[p].module.dim));
        Matrix comp(f.duals[p].dim, f.duals[q].dim);
        for (size_t k = 0; k < f.duals[q].dim; ++k)
          comp.set_col(k, f.duals[p].coords_of(f.duals[q].functionals[k] * t));
        dagger_rbar.right_action.push_back(f.dagger_layout.inject(p, f.duals[p].dim) * comp *
                                           f.dagger_layout.project(q, f.duals[q].dim));
      }
  BalancedTensor prod2 = tensor_over(dagger_rbar, RingDesc{d.barring.ring}, sigma_rbar);
  const Comodule sum2 = direct_sum_comodule(f.middle, over_mid);
  const Matrix can2 = canonical_matrix(f.middle, f.dagger_functionals, sum2, prod2);
  d.middle_can_bijective = prod2.dim() == f.middle.dim() && rank(can2) == f.middle.dim();
  return d;
}

namespace {

bool small_projective_for(const FamilyAnalysis& f, const Comodule& n) {
  // one copy of members[q] per basis map into the probe
  std::vector<Comodule> copies;
  std::vector<Matrix> legs;
  for (size_t q = 0; q < f.members.size(); ++q)
    for (const Matrix& t : comodule_hom(f.base, f.members[q], n)) {
      copies.push_back(f.members[q]);
      legs.push_back(t);
    }
  if (copies.empty()) return true;  // no member hom spaces to lift

  std::vector<size_t> dims;
  for (const auto& cp : copies) dims.push_back(cp.module.dim);
  DirectSum layout = direct_sum_layout(dims);
  Matrix ev(n.module.dim, layout.total);
  for (size_t i = 0; i < copies.size(); ++i) copy_block(ev, legs[i], 0, layout.offset(i));
  const Comodule e = direct_sum_comodule(f.base, copies);

  for (size_t p = 0; p < f.members.size(); ++p) {
    const std::vector<Matrix> into_n = comodule_hom(f.base, f.members[p], n);
    if (into_n.empty()) continue;
    const std::vector<Matrix> into_e = comodule_hom(f.base, f.members[p], e);
    SpanBuilder img(n.module.dim * f.members[p].module.dim);
    for (const Matrix& h : into_e) img.insert(flatten(ev * h));
    for (const Matrix& t : into_n)
      if (!img.member(flatten(t))) return false;
  }
  return true;
}

}  // namespace

DescentReport descent_report(const FamilyAnalysis& f, const std::vector<Comodule>& probes) {
  DescentReport r;
  const Algebra& a = f.base.algebra;
  r.members_fg_projective = true;  // analyze_family split a dual basis off every member

  r.can_bijective = canonical_map(f).bijective;

  const LeftModule sigma_r{f.sigma_layout.total, f.sigma_ra.left_action};
  r.sigma_faithfully_flat = is_faithfully_flat(RingDesc{f.homring.ring}, sigma_r).ok();

  const LeftModule base_left{f.base.dim(), f.base.bimodule.left_action};
  r.base_flat = is_faithfully_flat(RingDesc{a}, base_left).projective;

  r.generates_probes = true;
  r.small_projective = true;
  for (const Comodule& n : probes) {
    if (!is_generated_by(f.base, n, f.members)) r.generates_probes = false;
    if (!small_projective_for(f, n)) r.small_projective = false;
  }

  const EndRing ends = end_ring(RingDesc{a}, f.sigma);
  const LeftModule sigma_s{f.sigma_layout.total, ends.basis};
  r.s_faithfully_flat = is_faithfully_flat(RingDesc{ends.ring}, sigma_s).ok();

  const LeftModule mid_left{f.middle.dim(), f.middle.bimodule.left_action};
  r.middle_flat = is_faithfully_flat(RingDesc{a}, mid_left).projective;

  const MiddleDescent md = middle_descent(f);
  r.lambda_bijective = md.lambda_bijective;
  r.middle_can_bijective = md.middle_can_bijective;

  const bool galois_ff = r.members_fg_projective && r.can_bijective && r.sigma_faithfully_flat;
  if (galois_ff != (r.base_flat && r.generates_probes && r.small_projective))
    r.inconsistencies.push_back(
        "faithfully flat Galois verdict disagrees with the generator characterization");
  if (galois_ff !=
      (r.base_flat && r.members_fg_projective && r.can_bijective && r.s_faithfully_flat))
    r.inconsistencies.push_back(
        "faithfully flat Galois verdict disagrees with the endomorphism ring criterion");
  if (r.sigma_faithfully_flat != (r.middle_flat && r.s_faithfully_flat))
    r.inconsistencies.push_back(
        "faithful flatness over the hom ring disagrees with the split through the quotient");
  if (r.sigma_faithfully_flat && !r.lambda_bijective)
    r.inconsistencies.push_back(
        "faithfully flat over the hom ring, yet base and quotient hom rings differ");
  if (!r.middle_can_bijective)
    r.inconsistencies.push_back("canonical map over the quotient coring is not bijective");
  return r;
}

}  // namespace qcoring
