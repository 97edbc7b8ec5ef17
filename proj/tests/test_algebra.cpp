#include <doctest.h>

#include "fixtures.hpp"
#include "qcoring/dual.hpp"
#include "qcoring/tensor.hpp"

using namespace qcoring;

namespace {

// (A, Q)- and (Q, A)-bimodule views of the regular module.
Bimodule left_regular_only(const Algebra& a) {
  Bimodule m;
  m.dim = a.dim();
  for (size_t i = 0; i < a.dim(); ++i) m.left_action.push_back(a.lmul_basis(i));
  m.right_action = {Matrix::identity(a.dim())};
  return m;
}

Bimodule right_regular_only(const Algebra& a) {
  Bimodule m;
  m.dim = a.dim();
  m.left_action = {Matrix::identity(a.dim())};
  for (size_t j = 0; j < a.dim(); ++j) m.right_action.push_back(a.rmul_basis(j));
  return m;
}

}  // namespace

TEST_CASE("algebra axioms hold for the fixture algebras") {
  CHECK(check_algebra(Algebra::rationals()).ok());
  CHECK(check_algebra(group_algebra_c2()).ok());
  CHECK(check_algebra(truncated_poly()).ok());
  CHECK(check_idem_ring(IdemRing::from_algebra(group_algebra_c2())).ok());
}

TEST_CASE("algebra axiom checker reports violations") {
  // u*u = v, u*v = 0, v*u = u, v*v = 0 is not associative: (uu)u = u, u(uu) = 0.
  std::vector<std::vector<Vec>> s{
      {vecq({1, 0, 0}), vecq({0, 1, 0}), vecq({0, 0, 1})},
      {vecq({0, 1, 0}), vecq({0, 0, 1}), vecq({0, 0, 0})},
      {vecq({0, 0, 1}), vecq({0, 1, 0}), vecq({0, 0, 0})}};
  CHECK_FALSE(check_algebra(Algebra(s, vecq({1, 0, 0}))).ok());

  // broken left unit: 1*x = 2x
  std::vector<std::vector<Vec>> t{{vecq({1, 0}), vecq({0, 2})},
                                  {vecq({0, 1}), vecq({1, 0})}};
  CHECK_FALSE(check_algebra(Algebra(t, vecq({1, 0}))).ok());
}

TEST_CASE("regular modules satisfy the module axioms") {
  const Algebra a = group_algebra_c2();
  const RingDesc r{a};
  CHECK(check_right_module(r, regular_right_module(a)).ok());
  CHECK(check_left_module(r, regular_left_module(a)).ok());
  CHECK(check_bimodule(r, r, regular_bimodule(a)).ok());
  CHECK(check_right_module(r, idempotent_summand_plus()).ok());

  RightModule two = direct_sum({regular_right_module(a), regular_right_module(a)});
  CHECK(two.dim == 4);
  CHECK(check_right_module(r, two).ok());
}

TEST_CASE("jacobson radical of the fixture algebras") {
  CHECK(jacobson_radical(group_algebra_c2()).dim() == 0);
  Subspace rad = jacobson_radical(truncated_poly());
  CHECK(rad.dim() == 1);
  CHECK(rad.contains(vecq({0, 1})));
}

TEST_CASE("kron_apply agrees with the materialized product") {
  Matrix a = matq({{1, 2}, {3, 4}});
  Matrix b = matq({{0, 1, 0}, {2, 0, -1}});
  Matrix x(6, 1);
  for (size_t i = 0; i < 6; ++i) x(i, 0) = Rat(static_cast<long>(i) - 2);
  CHECK(kron_apply(a, b, x.col(0)) == (kron(a, b) * x).col(0));
}

TEST_CASE("tensor over the algebra itself collapses to the algebra") {
  for (const Algebra& a : {group_algebra_c2(), truncated_poly()}) {
    BalancedTensor t = tensor_over(regular_bimodule(a), RingDesc{a}, regular_bimodule(a));
    REQUIRE(t.dim() == a.dim());
    // multiplication induces the isomorphism and intertwines both actions
    Matrix mult(a.dim(), t.dim());
    for (size_t k = 0; k < t.dim(); ++k) {
      Vec amb = t.space.section.col(k);
      Vec out = vec_zero(a.dim());
      for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
          if (amb[i * a.dim() + j] != 0)
            out = vec_add(out, vec_scale(amb[i * a.dim() + j],
                                         a.mul(basis_vec(a.dim(), i), basis_vec(a.dim(), j))));
      mult.set_col(k, out);
    }
    CHECK(rank(mult) == a.dim());
    for (size_t i = 0; i < a.dim(); ++i) {
      CHECK(mult * t.outer.left_action[i] == a.lmul_basis(i) * mult);
      CHECK(mult * t.outer.right_action[i] == a.rmul_basis(i) * mult);
    }
    CHECK(check_bimodule(RingDesc{a}, RingDesc{a}, t.outer).ok());
  }
}

TEST_CASE("tensor over the scalars is the full tensor product") {
  const Algebra a = group_algebra_c2();
  BalancedTensor t =
      tensor_over(left_regular_only(a), RingDesc{Algebra::rationals()}, right_regular_only(a));
  CHECK(t.dim() == 4);
  CHECK(check_bimodule(RingDesc{a}, RingDesc{a}, t.outer).ok());
}

TEST_CASE("balanced tensor with a torsion module cuts the expected relations") {
  const Algebra a = truncated_poly();
  // Q with x acting as zero, viewed as a (Q, A)-bimodule
  Bimodule mm;
  mm.dim = 1;
  mm.left_action = {Matrix::identity(1)};
  mm.right_action = {matq({{1}}), matq({{0}})};
  BalancedTensor t = tensor_over(mm, RingDesc{a}, regular_bimodule(a));
  CHECK(t.dim() == 1);
}

TEST_CASE("tensor over an idempotented ring requires unital modules") {
  const IdemRing r = IdemRing::from_algebra(group_algebra_c2());
  Bimodule bad;
  bad.dim = 1;
  bad.left_action = {Matrix::identity(1)};
  bad.right_action = {matq({{0}}), matq({{0}})};
  Bimodule good;
  good.dim = 2;
  good.left_action = {Matrix::identity(2)};
  for (size_t j = 0; j < 2; ++j) good.right_action.push_back(group_algebra_c2().rmul_basis(j));
  CHECK_THROWS_AS(tensor_over(bad, RingDesc{r}, good), std::invalid_argument);
  CHECK(tensor_over(good, RingDesc{r}, opposite(good)).dim() == 2);
}

TEST_CASE("regroup is the identity on an unquotiented triple product") {
  const Algebra a = group_algebra_c2();
  const RingDesc q{Algebra::rationals()};
  Bimodule mid;
  mid.dim = 2;
  mid.left_action = {Matrix::identity(2)};
  mid.right_action = {Matrix::identity(2)};
  BalancedTensor mn = tensor_over(left_regular_only(a), q, mid);
  BalancedTensor nk = tensor_over(mid, q, right_regular_only(a));
  CHECK(regroup(mn, nk, 2) == Matrix::identity(8));
}

TEST_CASE("regroup induces a bijection between the iterated quotients") {
  const Algebra a = group_algebra_c2();
  const RingDesc r{a};
  const Bimodule reg = regular_bimodule(a);
  BalancedTensor ab = tensor_over(reg, r, reg);
  BalancedTensor left = tensor_over(ab.outer, r, reg);    // (A (x) A) (x) A
  BalancedTensor right = tensor_over(reg, r, ab.outer);   // A (x) (A (x) A)
  Matrix raw = regroup(ab, ab, a.dim());
  Matrix assoc = left.space.projection * raw * right.space.section;
  CHECK(assoc.rows() == left.dim());
  CHECK(assoc.cols() == right.dim());
  CHECK(rank(assoc) == left.dim());
  CHECK(left.dim() == right.dim());
}

TEST_CASE("hom spaces of right modules have the expected dimensions") {
  const Algebra a = group_algebra_c2();
  const RingDesc r{a};
  const RightModule reg = regular_right_module(a);
  auto endo = hom_right(r, reg, reg);
  CHECK(endo.size() == 2);
  auto from_summand = hom_right(r, idempotent_summand_plus(), reg);
  REQUIRE(from_summand.size() == 1);
  // right-linearity of the canonical basis
  for (size_t b = 0; b < 2; ++b)
    CHECK(from_summand[0] * idempotent_summand_plus().action[b] ==
          a.rmul_basis(b) * from_summand[0]);
}

TEST_CASE("dual module of the regular module") {
  const Algebra a = group_algebra_c2();
  DualModule d = dual_module(a, regular_right_module(a));
  CHECK(d.dim == 2);
  CHECK(check_bimodule(RingDesc{a}, RingDesc{Algebra::rationals()}, d.bimodule).ok());

  EndRing t = end_ring(RingDesc{a}, regular_right_module(a));
  DualModule dt = dual_module(a, regular_right_module(a), t.action);
  CHECK(check_bimodule(RingDesc{a}, RingDesc{t.ring}, dt.bimodule).ok());

  DualModule dp = dual_module(a, idempotent_summand_plus());
  CHECK(dp.dim == 1);
}

TEST_CASE("dual bases exist for projective modules and split the cover") {
  const Algebra a = group_algebra_c2();
  const RightModule reg = regular_right_module(a);

  auto db1 = dual_basis(a, reg, {vecq({1, 0})});
  REQUIRE(db1.has_value());
  CHECK(db1->elements.size() == 1);
  CHECK(verify_dual_basis(a, reg, *db1).ok());

  auto db2 = dual_basis(a, reg, {vecq({1, 0}), vecq({0, 1})});
  REQUIRE(db2.has_value());
  CHECK(db2->elements.size() == 2);
  CHECK(verify_dual_basis(a, reg, *db2).ok());

  auto dbp = dual_basis(a, idempotent_summand_plus());
  REQUIRE(dbp.has_value());
  CHECK(verify_dual_basis(a, idempotent_summand_plus(), *dbp).ok());
}

TEST_CASE("dual basis is refused for a non-projective module") {
  CHECK_FALSE(dual_basis(truncated_poly(), scalars_over_truncated()).has_value());
}

TEST_CASE("functionals are recovered from any dual basis") {
  const Algebra a = group_algebra_c2();
  const RightModule reg = regular_right_module(a);
  auto db = dual_basis(a, reg, {vecq({1, 0}), vecq({1, 1})});
  REQUIRE(db.has_value());
  REQUIRE(verify_dual_basis(a, reg, *db).ok());
  DualModule d = dual_module(a, reg);
  for (const Matrix& f : d.functionals) {
    Matrix rebuilt(a.dim(), reg.dim);
    for (size_t i = 0; i < db->elements.size(); ++i)
      rebuilt = rebuilt + a.lmul(f.apply(db->elements[i])) * db->functionals[i];
    CHECK(rebuilt == f);
  }
}

TEST_CASE("endomorphism ring of the regular module") {
  const Algebra a = group_algebra_c2();
  EndRing e = end_ring(RingDesc{a}, regular_right_module(a));
  CHECK(e.ring.dim() == 2);
  CHECK(check_algebra(e.ring).ok());
  CHECK(check_left_module(RingDesc{e.ring}, LeftModule{2, e.action.maps}).ok());

  EndRing e2 = end_ring(RingDesc{a}, direct_sum({regular_right_module(a), regular_right_module(a)}));
  CHECK(e2.ring.dim() == 8);
  CHECK(check_algebra(e2.ring).ok());
}

TEST_CASE("faithful flatness of finite modules") {
  const Algebra c2 = group_algebra_c2();
  const Algebra tp = truncated_poly();

  FlatnessReport reg = is_faithfully_flat(RingDesc{c2}, regular_left_module(c2));
  CHECK(reg.projective);
  CHECK(reg.faithful);
  CHECK(reg.ok());

  // Q over Q[x]/(x^2) with x acting as zero: faithful but not projective.
  FlatnessReport scal = is_faithfully_flat(RingDesc{tp}, LeftModule{1, {matq({{1}}), matq({{0}})}});
  CHECK_FALSE(scal.projective);
  CHECK(scal.faithful);
  CHECK_FALSE(scal.ok());

  // the left ideal generated by (1+x)/2: projective but misses a simple block
  FlatnessReport half = is_faithfully_flat(RingDesc{c2}, LeftModule{1, {matq({{1}}), matq({{1}})}});
  CHECK(half.projective);
  CHECK_FALSE(half.faithful);

  FlatnessReport idem =
      is_faithfully_flat(RingDesc{IdemRing::from_algebra(c2)}, regular_left_module(c2));
  CHECK(idem.ok());
}
