#include "qcoring/graded.hpp"

#include <stdexcept>

namespace qcoring {

size_t FiniteGroup::inverse(size_t i) const {
  for (size_t j = 0; j < order; ++j)
    if (table[i][j] == identity) return j;
  throw std::invalid_argument("group element has no inverse");
}

ValidationReport check_group(const FiniteGroup& g) {
  ValidationReport rep;
  if (g.order == 0 || g.table.size() != g.order || g.identity >= g.order) {
    rep.fail("malformed multiplication table");
    return rep;
  }
  for (const auto& row : g.table) {
    if (row.size() != g.order) {
      rep.fail("malformed multiplication table");
      return rep;
    }
    for (size_t v : row)
      if (v >= g.order) {
        rep.fail("multiplication table entry out of range");
        return rep;
      }
  }
  for (size_t i = 0; i < g.order; ++i) {
    if (g.mul(g.identity, i) != i || g.mul(i, g.identity) != i)
      rep.fail("identity law fails at element " + std::to_string(i));
    bool has_inverse = false;
    for (size_t j = 0; j < g.order; ++j)
      if (g.mul(i, j) == g.identity && g.mul(j, i) == g.identity) has_inverse = true;
    if (!has_inverse) rep.fail("element " + std::to_string(i) + " has no inverse");
  }
  for (size_t i = 0; i < g.order; ++i)
    for (size_t j = 0; j < g.order; ++j)
      for (size_t k = 0; k < g.order; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
          rep.fail("associativity fails at (" + std::to_string(i) + ", " + std::to_string(j) +
                   ", " + std::to_string(k) + ")");
  return rep;
}

FiniteGroup cyclic_group(size_t n) {
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

FiniteGroup klein_four_group() {
  FiniteGroup g;
  g.order = 4;
  g.identity = 0;
  g.table.assign(4, std::vector<size_t>(4));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) g.table[i][j] = i ^ j;
  return g;
}

std::vector<Matrix> component_projectors(size_t dim, const std::vector<Subspace>& comps) {
  size_t total = 0;
  for (const Subspace& c : comps) {
    if (c.ambient_dim() != dim)
      throw std::invalid_argument("component lives in the wrong ambient space");
    total += c.dim();
  }
  if (total != dim) throw std::invalid_argument("components do not decompose the space");
  Matrix t(dim, dim);  // columns are the homogeneous basis vectors
  size_t col = 0;
  for (const Subspace& c : comps)
    for (size_t r = 0; r < c.dim(); ++r) t.set_col(col++, c.basis().row(r));
  auto inv = solve_right(t, Matrix::identity(dim));
  if (!inv) throw std::invalid_argument("components do not decompose the space");
  std::vector<Matrix> out;
  col = 0;
  for (const Subspace& c : comps) {
    Matrix d(dim, dim);
    for (size_t r = 0; r < c.dim(); ++r) d(col + r, col + r) = Rat(1);
    out.push_back(t * d * *inv);
    col += c.dim();
  }
  return out;
}

ValidationReport check_graded_algebra(const GradedAlgebra& a) {
  ValidationReport rep;
  rep.merge(check_algebra(a.algebra), "algebra: ");
  rep.merge(check_group(a.group), "group: ");
  if (!rep.ok()) return rep;
  const size_t da = a.algebra.dim(), n = a.group.order;
  if (a.components.size() != n) {
    rep.fail("component count differs from the group order");
    return rep;
  }
  size_t total = 0;
  Subspace sum = Subspace::zero(da);
  for (const Subspace& c : a.components) {
    if (c.ambient_dim() != da) {
      rep.fail("component lives in the wrong ambient space");
      return rep;
    }
    total += c.dim();
    sum = sum.sum(c);
  }
  if (total != da || sum != Subspace::full(da))
    rep.fail("components do not decompose the algebra");
  if (!a.components[a.group.identity].contains(a.algebra.unit()))
    rep.fail("unit is not in the identity component");
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h) {
      const size_t gh = a.group.mul(g, h);
      for (size_t r = 0; r < a.components[g].dim(); ++r)
        for (size_t s = 0; s < a.components[h].dim(); ++s)
          if (!a.components[gh].contains(
                  a.algebra.mul(a.components[g].basis().row(r), a.components[h].basis().row(s))))
            rep.fail("product of degrees " + std::to_string(g) + " and " + std::to_string(h) +
                     " leaves its component");
    }
  return rep;
}

ValidationReport check_graded_module(const GradedAlgebra& a, const GradedModule& m) {
  ValidationReport rep;
  rep.merge(check_right_module(RingDesc{a.algebra}, m.module), "module: ");
  const size_t dm = m.module.dim, n = a.group.order;
  if (m.components.size() != n) {
    rep.fail("component count differs from the group order");
    return rep;
  }
  size_t total = 0;
  Subspace sum = Subspace::zero(dm);
  for (const Subspace& c : m.components) {
    if (c.ambient_dim() != dm) {
      rep.fail("component lives in the wrong ambient space");
      return rep;
    }
    total += c.dim();
    sum = sum.sum(c);
  }
  if (total != dm || sum != Subspace::full(dm))
    rep.fail("components do not decompose the module");
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h) {
      const size_t gh = a.group.mul(g, h);
      for (size_t r = 0; r < m.components[g].dim(); ++r)
        for (size_t s = 0; s < a.components[h].dim(); ++s)
          if (!m.components[gh].contains(
                  act(m.module.action, a.components[h].basis().row(s))
                      .apply(m.components[g].basis().row(r))))
            rep.fail("module degree " + std::to_string(g) + " times algebra degree " +
                     std::to_string(h) + " leaves its component");
    }
  return rep;
}

bool is_strongly_graded(const GradedAlgebra& a) {
  const size_t n = a.group.order;
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h) {
      SpanBuilder span(a.algebra.dim());
      for (size_t r = 0; r < a.components[g].dim(); ++r)
        for (size_t s = 0; s < a.components[h].dim(); ++s)
          span.insert(
              a.algebra.mul(a.components[g].basis().row(r), a.components[h].basis().row(s)));
      if (span.subspace() != a.components[a.group.mul(g, h)]) return false;
    }
  return true;
}

Coring graded_coring(const GradedAlgebra& ga) {
  const Algebra& a = ga.algebra;
  const size_t da = a.dim(), n = ga.group.order, d = n * da;
  const std::vector<Matrix> proj = component_projectors(da, ga.components);

  Bimodule c;
  c.dim = d;
  const Matrix id_n = Matrix::identity(n);
  for (size_t i = 0; i < da; ++i) c.left_action.push_back(kron(id_n, a.lmul_basis(i)));
  for (size_t j = 0; j < da; ++j) {
    Matrix rm(d, d);
    for (size_t h = 0; h < n; ++h) {
      const Vec ejh = proj[h].col(j);
      if (vec_is_zero(ejh)) continue;
      const Matrix rmul_h = a.rmul(ejh);
      for (size_t g = 0; g < n; ++g) {
        const size_t gh = ga.group.mul(g, h);
        for (size_t r = 0; r < da; ++r)
          for (size_t s = 0; s < da; ++s)
            if (rmul_h(r, s) != 0) rm(gh * da + r, g * da + s) += rmul_h(r, s);
      }
    }
    c.right_action.push_back(std::move(rm));
  }

  Matrix delta_ambient(d * d, d);
  for (size_t g = 0; g < n; ++g)
    for (size_t i = 0; i < da; ++i)
      for (size_t u = 0; u < da; ++u)
        if (a.unit()[u] != 0)
          delta_ambient((g * da + i) * d + (g * da + u), g * da + i) = a.unit()[u];

  Matrix counit(da, d);
  for (size_t g = 0; g < n; ++g)
    for (size_t i = 0; i < da; ++i) counit(i, g * da + i) = Rat(1);

  return make_coring(a, c, delta_ambient, counit);
}

Vec group_grouplike(const GradedAlgebra& a, size_t g) {
  const size_t da = a.algebra.dim();
  Vec v = vec_zero(a.group.order * da);
  for (size_t u = 0; u < da; ++u) v[g * da + u] = a.algebra.unit()[u];
  return v;
}

Comodule to_comodule(const GradedAlgebra& ga, const Coring& c, const GradedModule& gm) {
  const size_t dm = gm.module.dim, dc = c.dim(), da = ga.algebra.dim(), n = ga.group.order;
  const std::vector<Matrix> proj = component_projectors(dm, gm.components);
  Matrix amb(dm * dc, dm);
  for (size_t col = 0; col < dm; ++col)
    for (size_t h = 0; h < n; ++h) {
      const Vec mh = proj[h].col(col);
      for (size_t r = 0; r < dm; ++r) {
        if (mh[r] == 0) continue;
        for (size_t u = 0; u < da; ++u)
          if (ga.algebra.unit()[u] != 0)
            amb(r * dc + (h * da + u), col) += mh[r] * ga.algebra.unit()[u];
      }
    }
  return make_comodule(c, gm.module, amb);
}

GradedModule from_comodule(const GradedAlgebra& ga, const Coring& c, const Comodule& m) {
  const size_t dm = m.module.dim, dc = c.dim(), da = ga.algebra.dim(), n = ga.group.order;
  GradedModule out;
  out.module = m.module;
  for (size_t h = 0; h < n; ++h) {
    Matrix jh(m.product.dim(), dm);
    for (size_t col = 0; col < dm; ++col) {
      Vec amb = vec_zero(dm * dc);
      for (size_t u = 0; u < da; ++u)
        if (ga.algebra.unit()[u] != 0) amb[col * dc + h * da + u] = ga.algebra.unit()[u];
      jh.set_col(col, m.product.space.projection.apply(amb));
    }
    out.components.push_back(kernel_basis(m.coaction - jh));
  }
  return out;
}

GradedModule shifted_regular(const GradedAlgebra& a, size_t g) {
  GradedModule m;
  m.module = regular_right_module(a.algebra);
  const size_t ginv = a.group.inverse(g);
  for (size_t h = 0; h < a.group.order; ++h)
    m.components.push_back(a.components[a.group.mul(ginv, h)]);
  return m;
}

}  // namespace qcoring
