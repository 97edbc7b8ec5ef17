#include "qcoring/coring.hpp"

#include <stdexcept>

namespace qcoring {

namespace {

void check_cols_equal(ValidationReport& rep, const Matrix& got, const Matrix& want,
                      const std::string& what) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    rep.fail(what + ": shape mismatch");
    return;
  }
  for (size_t j = 0; j < got.cols(); ++j)
    if (got.col(j) != want.col(j)) rep.fail(what + " on basis vector " + std::to_string(j));
}

// permutation of tensor ambients (i, j) -> (j, i)
Matrix flip_matrix(size_t d1, size_t d2) {
  Matrix f(d2 * d1, d1 * d2);
  for (size_t i = 0; i < d1; ++i)
    for (size_t j = 0; j < d2; ++j) f(j * d1 + i, i * d2 + j) = Rat(1);
  return f;
}

}  // namespace

BalancedTensor coring_square(const Algebra& a, const Bimodule& c) {
  return tensor_over(c, RingDesc{a}, c);
}

Coring make_coring(const Algebra& a, const Bimodule& c, const Matrix& delta_ambient,
                   const Matrix& counit) {
  Coring k;
  k.algebra = a;
  k.bimodule = c;
  k.square = coring_square(a, c);
  if (delta_ambient.rows() != c.dim * c.dim || delta_ambient.cols() != c.dim)
    throw std::invalid_argument("make_coring: comultiplication has wrong shape");
  if (counit.rows() != a.dim() || counit.cols() != c.dim)
    throw std::invalid_argument("make_coring: counit has wrong shape");
  k.delta = k.square.space.projection * delta_ambient;
  k.counit = counit;
  return k;
}

ValidationReport check_coring(const Coring& c) {
  ValidationReport rep;
  const size_t d = c.dim(), da = c.algebra.dim();
  const RingDesc r{c.algebra};
  rep.merge(check_bimodule(r, r, c.bimodule), "bimodule: ");
  if (c.delta.rows() != c.square.dim() || c.delta.cols() != d) rep.fail("comultiplication shape");
  if (c.counit.rows() != da || c.counit.cols() != d) rep.fail("counit shape");
  if (!rep.ok()) return rep;

  for (size_t i = 0; i < da; ++i) {
    if (c.delta * c.bimodule.left_action[i] != c.square.outer.left_action[i] * c.delta)
      rep.fail("comultiplication is not left-linear at algebra basis " + std::to_string(i));
    if (c.delta * c.bimodule.right_action[i] != c.square.outer.right_action[i] * c.delta)
      rep.fail("comultiplication is not right-linear at algebra basis " + std::to_string(i));
    if (c.counit * c.bimodule.left_action[i] != c.algebra.lmul_basis(i) * c.counit)
      rep.fail("counit is not left-linear at algebra basis " + std::to_string(i));
    if (c.counit * c.bimodule.right_action[i] != c.algebra.rmul_basis(i) * c.counit)
      rep.fail("counit is not right-linear at algebra basis " + std::to_string(i));
  }
  if (!rep.ok()) return rep;

  const Matrix lift = c.square.space.section * c.delta;  // C -> ambient of C (x) C
  const Matrix id_c = Matrix::identity(d);

  BalancedTensor t3l = tensor_over(c.square.outer, r, c.bimodule);
  BalancedTensor t3r = tensor_over(c.bimodule, r, c.square.outer);
  const Matrix m1 = t3l.space.projection * kron_apply(c.delta, id_c, lift);
  const Matrix m2 = t3r.space.projection * kron_apply(id_c, c.delta, lift);
  const Matrix assoc =
      t3l.space.projection * regroup(c.square, c.square, d) * t3r.space.section;
  check_cols_equal(rep, m1, assoc * m2, "coassociativity fails");

  Matrix contract_left(d, d * d), contract_right(d, d * d);
  for (size_t i = 0; i < d; ++i) {
    const Matrix la = act(c.bimodule.left_action, c.counit.col(i));
    const Matrix ra = act(c.bimodule.right_action, c.counit.col(i));
    for (size_t j = 0; j < d; ++j) {
      contract_left.set_col(i * d + j, la.col(j));   // eps(c_i) . c_j
      contract_right.set_col(j * d + i, ra.col(j));  // c_j . eps(c_i)
    }
  }
  check_cols_equal(rep, contract_left * lift, id_c, "left counit law fails");
  check_cols_equal(rep, contract_right * lift, id_c, "right counit law fails");
  return rep;
}

Coring trivial_coring(const Algebra& a) {
  const size_t d = a.dim();
  Matrix delta_ambient(d * d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t u = 0; u < d; ++u) delta_ambient(i * d + u, i) = a.unit()[u];
  return make_coring(a, regular_bimodule(a), delta_ambient, Matrix::identity(d));
}

Coring sweedler_coring(const Algebra& a) {
  const size_t da = a.dim(), d = da * da;
  Bimodule c;
  c.dim = d;
  const Matrix id = Matrix::identity(da);
  for (size_t i = 0; i < da; ++i) {
    c.left_action.push_back(kron(a.lmul_basis(i), id));
    c.right_action.push_back(kron(id, a.rmul_basis(i)));
  }
  // (e_i (x) e_j) -> (e_i (x) 1) (x) (1 (x) e_j)
  Matrix delta_ambient(d * d, d);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j)
      for (size_t u = 0; u < da; ++u)
        for (size_t v = 0; v < da; ++v) {
          const Rat coeff = a.unit()[u] * a.unit()[v];
          if (coeff != 0) delta_ambient((i * da + u) * d + (v * da + j), i * da + j) = coeff;
        }
  Matrix counit(da, d);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j)
      counit.set_col(i * da + j, a.mul(basis_vec(da, i), basis_vec(da, j)));
  return make_coring(a, c, delta_ambient, counit);
}

Coring opposite_coring(const Coring& c) {
  Coring o;
  o.algebra = c.algebra.opposite();
  o.bimodule = opposite(c.bimodule);
  o.square = coring_square(o.algebra, o.bimodule);
  const size_t d = c.dim();
  o.delta = o.square.space.projection * flip_matrix(d, d) * c.square.space.section * c.delta;
  o.counit = c.counit;
  return o;
}

Comodule make_comodule(const Coring& c, const RightModule& m, const Matrix& coaction_ambient) {
  Comodule k;
  k.module = m;
  k.product = tensor_over(as_bimodule_right(m), RingDesc{c.algebra}, c.bimodule);
  if (coaction_ambient.rows() != m.dim * c.dim() || coaction_ambient.cols() != m.dim)
    throw std::invalid_argument("make_comodule: coaction has wrong shape");
  k.coaction = k.product.space.projection * coaction_ambient;
  return k;
}

LeftComodule make_left_comodule(const Coring& c, const LeftModule& m,
                                const Matrix& coaction_ambient) {
  LeftComodule k;
  k.module = m;
  k.product = tensor_over(c.bimodule, RingDesc{c.algebra}, as_bimodule_left(m));
  if (coaction_ambient.rows() != c.dim() * m.dim || coaction_ambient.cols() != m.dim)
    throw std::invalid_argument("make_left_comodule: coaction has wrong shape");
  k.coaction = k.product.space.projection * coaction_ambient;
  return k;
}

ValidationReport check_comodule(const Coring& c, const Comodule& m) {
  ValidationReport rep;
  const RingDesc r{c.algebra};
  const size_t dm = m.module.dim, dc = c.dim(), da = c.algebra.dim();
  rep.merge(check_right_module(r, m.module), "module: ");
  if (m.coaction.rows() != m.product.dim() || m.coaction.cols() != dm) {
    rep.fail("coaction shape");
    return rep;
  }
  for (size_t j = 0; j < da; ++j)
    if (m.coaction * m.module.action[j] != m.product.outer.right_action[j] * m.coaction)
      rep.fail("coaction is not right-linear at algebra basis " + std::to_string(j));
  if (!rep.ok()) return rep;

  const Matrix lift = m.product.space.section * m.coaction;  // M -> ambient of M (x) C
  BalancedTensor t3l = tensor_over(m.product.outer, r, c.bimodule);
  BalancedTensor t3r = tensor_over(as_bimodule_right(m.module), r, c.square.outer);
  const Matrix m1 = t3l.space.projection * kron_apply(m.coaction, Matrix::identity(dc), lift);
  const Matrix m2 = t3r.space.projection * kron_apply(Matrix::identity(dm), c.delta, lift);
  const Matrix assoc =
      t3l.space.projection * regroup(m.product, c.square, dc) * t3r.space.section;
  check_cols_equal(rep, m1, assoc * m2, "coaction coassociativity fails");

  Matrix contract(dm, dm * dc);  // (m_i, c_j) -> m_i . eps(c_j)
  for (size_t j = 0; j < dc; ++j) {
    const Matrix ra = act(m.module.action, c.counit.col(j));
    for (size_t i = 0; i < dm; ++i) contract.set_col(i * dc + j, ra.col(i));
  }
  check_cols_equal(rep, contract * lift, Matrix::identity(dm), "coaction counit law fails");
  return rep;
}

Comodule opposite_comodule(const Coring& opposite_c, const LeftComodule& m) {
  Comodule o;
  o.module = RightModule{m.module.dim, m.module.action};
  o.product =
      tensor_over(as_bimodule_right(o.module), RingDesc{opposite_c.algebra}, opposite_c.bimodule);
  const size_t dc = opposite_c.dim(), dm = m.module.dim;
  o.coaction = o.product.space.projection * flip_matrix(dc, dm) * m.product.space.section *
               m.coaction;
  return o;
}

ValidationReport check_left_comodule(const Coring& c, const LeftComodule& m) {
  ValidationReport rep;
  if (m.coaction.rows() != m.product.dim() || m.coaction.cols() != m.module.dim) {
    rep.fail("coaction shape");
    return rep;
  }
  Coring oc = opposite_coring(c);
  rep.merge(check_comodule(oc, opposite_comodule(oc, m)), "via opposite coring: ");
  return rep;
}

std::vector<Matrix> comodule_hom(const Coring& c, const Comodule& m, const Comodule& n) {
  const size_t dm = m.module.dim, dn = n.module.dim, dc = c.dim(), da = c.algebra.dim();
  const Matrix s = m.product.space.section * m.coaction;  // (dm*dc) x dm
  const Matrix& p = n.product.space.projection;           // n.product.dim x (dn*dc)

  // b[(w,v),(r,u)] = sum_t p(w,(r,t)) * s((u,t),v) encodes X -> p (X (x) 1) s
  Matrix b(n.product.dim() * dm, dn * dm);
  for (size_t w = 0; w < n.product.dim(); ++w)
    for (size_t r = 0; r < dn; ++r)
      for (size_t t = 0; t < dc; ++t) {
        const Rat& pv = p(w, r * dc + t);
        if (pv == 0) continue;
        for (size_t u = 0; u < dm; ++u)
          for (size_t v = 0; v < dm; ++v) {
            const Rat& sv = s(u * dc + t, v);
            if (sv != 0) b(w * dm + v, r * dm + u) += pv * sv;
          }
      }

  const size_t nvars = dn * dm;
  const Matrix id_n = Matrix::identity(dn), id_m = Matrix::identity(dm);
  Matrix sys(da * nvars + n.product.dim() * dm, nvars);
  for (size_t j = 0; j < da; ++j) {
    const Matrix block =
        kron(id_n, m.module.action[j].transpose()) - kron(n.module.action[j], id_m);
    for (size_t rr = 0; rr < nvars; ++rr) sys.set_row(j * nvars + rr, block.row(rr));
  }
  const Matrix cblock = kron(n.coaction, id_m) - b;
  for (size_t rr = 0; rr < cblock.rows(); ++rr) sys.set_row(da * nvars + rr, cblock.row(rr));

  Subspace ker = kernel_basis(sys);
  std::vector<Matrix> out;
  out.reserve(ker.dim());
  for (size_t k = 0; k < ker.dim(); ++k) out.push_back(unflatten(ker.basis().row(k), dn, dm));
  return out;
}

bool is_grouplike(const Coring& c, const Vec& g) {
  if (g.size() != c.dim()) return false;
  Vec amb = vec_zero(c.dim() * c.dim());
  for (size_t i = 0; i < c.dim(); ++i) {
    if (g[i] == 0) continue;
    for (size_t j = 0; j < c.dim(); ++j)
      if (g[j] != 0) amb[i * c.dim() + j] += g[i] * g[j];
  }
  return c.delta.apply(g) == c.square.space.projection.apply(amb) &&
         c.counit.apply(g) == c.algebra.unit();
}

Comodule comodule_from_grouplike(const Coring& c, const Vec& g) {
  const size_t da = c.algebra.dim(), dc = c.dim();
  Matrix coaction_ambient(da * dc, da);
  for (size_t b = 0; b < da; ++b) {
    const Vec ga = act(c.bimodule.right_action, basis_vec(da, b)).apply(g);  // g . a
    for (size_t i = 0; i < da; ++i) {
      if (c.algebra.unit()[i] == 0) continue;
      for (size_t j = 0; j < dc; ++j)
        if (ga[j] != 0) coaction_ambient(i * dc + j, b) += c.algebra.unit()[i] * ga[j];
    }
  }
  return make_comodule(c, regular_right_module(c.algebra), coaction_ambient);
}

LeftComodule left_comodule_from_grouplike(const Coring& c, const Vec& g) {
  const size_t da = c.algebra.dim(), dc = c.dim();
  Matrix coaction_ambient(dc * da, da);
  for (size_t b = 0; b < da; ++b) {
    const Vec ag = act(c.bimodule.left_action, basis_vec(da, b)).apply(g);  // a . g
    for (size_t i = 0; i < dc; ++i) {
      if (ag[i] == 0) continue;
      for (size_t j = 0; j < da; ++j)
        if (c.algebra.unit()[j] != 0) coaction_ambient(i * da + j, b) += ag[i] * c.algebra.unit()[j];
    }
  }
  return make_left_comodule(c, regular_left_module(c.algebra), coaction_ambient);
}

Subspace grouplike_hom_space(const Coring& c, const Vec& g, const Vec& h) {
  const size_t da = c.algebra.dim();
  Matrix sys(c.dim(), da);
  for (size_t i = 0; i < da; ++i) {
    const Vec hb = act(c.bimodule.right_action, basis_vec(da, i)).apply(h);
    const Vec bg = act(c.bimodule.left_action, basis_vec(da, i)).apply(g);
    sys.set_col(i, vec_sub(hb, bg));
  }
  return kernel_basis(sys);
}

CotensorResult cotensor(const Coring& c, const Comodule& m, const LeftComodule& n) {
  const RingDesc r{c.algebra};
  const size_t dm = m.module.dim, dn = n.module.dim;
  BalancedTensor t = tensor_over(as_bimodule_right(m.module), r, as_bimodule_left(n.module));
  BalancedTensor u = tensor_over(m.product.outer, r, as_bimodule_left(n.module));
  BalancedTensor v = tensor_over(as_bimodule_right(m.module), r, n.product.outer);
  const Matrix rho = u.space.projection * kron_apply(m.coaction, Matrix::identity(dn),
                                                     t.space.section);
  const Matrix lam = v.space.projection * kron_apply(Matrix::identity(dm), n.coaction,
                                                     t.space.section);
  const Matrix assoc = u.space.projection * regroup(m.product, n.product, dn) * v.space.section;
  return {t, kernel_basis(rho - assoc * lam)};
}

bool is_generated_by(const Coring& c, const Comodule& m, const std::vector<Comodule>& family) {
  SpanBuilder span(m.module.dim);
  for (const Comodule& p : family)
    for (const Matrix& f : comodule_hom(c, p, m))
      for (size_t col = 0; col < f.cols(); ++col) span.insert(f.col(col));
  return span.dim() == m.module.dim;
}

}  // namespace qcoring
