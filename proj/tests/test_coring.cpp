#include <doctest.h>

#include "fixtures.hpp"
#include "qcoring/coring.hpp"

using namespace qcoring;

TEST_CASE("trivial coring satisfies the coring axioms") {
  for (const Algebra& a : {Algebra::rationals(), group_algebra_c2(), truncated_poly()}) {
    Coring c = trivial_coring(a);
    CHECK(c.dim() == a.dim());
    CHECK(check_coring(c).ok());
    CHECK(is_grouplike(c, a.unit()));
  }
}

TEST_CASE("sweedler coring over the group algebra") {
  Coring c = sweedler_coring(group_algebra_c2());
  CHECK(c.dim() == 4);
  CHECK(check_coring(c).ok());
  // 1 (x) 1 is grouplike, 1 (x) x is not
  CHECK(is_grouplike(c, basis_vec(4, 0)));
  CHECK_FALSE(is_grouplike(c, basis_vec(4, 1)));
}

TEST_CASE("graded coring over the fixtures") {
  for (const GradedAlgebra& ga : {graded_c2(), graded_truncated()}) {
    Coring c = graded_coring(ga);
    CHECK(c.dim() == 4);
    CHECK(check_coring(c).ok());
    CHECK(is_grouplike(c, group_grouplike(ga, 0)));
    CHECK(is_grouplike(c, group_grouplike(ga, 1)));
    CHECK_FALSE(is_grouplike(c, vec_add(group_grouplike(ga, 0), group_grouplike(ga, 1))));
  }
}

TEST_CASE("coring checker rejects broken structure maps") {
  const Algebra a = group_algebra_c2();
  const Bimodule reg = regular_bimodule(a);
  // zero comultiplication violates the counit laws
  Coring zero_delta = make_coring(a, reg, Matrix(4, 2), Matrix::identity(2));
  CHECK_FALSE(check_coring(zero_delta).ok());
  // counit that is not the identity on A (x)_A A breaks the counit law too
  Coring good = trivial_coring(a);
  Coring bad = good;
  bad.counit = bad.counit * Rat(2);
  CHECK_FALSE(check_coring(bad).ok());
}

TEST_CASE("opposite coring is again a coring") {
  Coring c = graded_coring(graded_c2());
  CHECK(check_coring(opposite_coring(c)).ok());
  Coring s = sweedler_coring(truncated_poly());
  CHECK(check_coring(opposite_coring(s)).ok());
}

TEST_CASE("grouplikes induce comodule structures on the algebra") {
  for (const GradedAlgebra& ga : {graded_c2(), graded_truncated()}) {
    Coring c = graded_coring(ga);
    for (size_t g = 0; g < 2; ++g) {
      Comodule m = comodule_from_grouplike(c, group_grouplike(ga, g));
      CHECK(check_comodule(c, m).ok());
      LeftComodule l = left_comodule_from_grouplike(c, group_grouplike(ga, g));
      CHECK(check_left_comodule(c, l).ok());
    }
  }
  Coring sw = sweedler_coring(group_algebra_c2());
  Comodule m = comodule_from_grouplike(sw, basis_vec(4, 0));
  CHECK(check_comodule(sw, m).ok());
}

TEST_CASE("grouplike hom spaces match the degree components") {
  for (const GradedAlgebra& ga : {graded_c2(), graded_truncated()}) {
    Coring c = graded_coring(ga);
    for (size_t g = 0; g < 2; ++g)
      for (size_t h = 0; h < 2; ++h) {
        const size_t expect = ga.group.mul(ga.group.inverse(h), g);
        CHECK(grouplike_hom_space(c, group_grouplike(ga, g), group_grouplike(ga, h)) ==
              ga.components[expect]);
      }
  }
}

TEST_CASE("left multiplication realizes grouplike homs as comodule maps") {
  for (const GradedAlgebra& ga : {graded_c2(), graded_truncated()}) {
    Coring c = graded_coring(ga);
    for (size_t g = 0; g < 2; ++g)
      for (size_t h = 0; h < 2; ++h) {
        Comodule mg = comodule_from_grouplike(c, group_grouplike(ga, g));
        Comodule mh = comodule_from_grouplike(c, group_grouplike(ga, h));
        std::vector<Matrix> homs = comodule_hom(c, mg, mh);
        Subspace space = grouplike_hom_space(c, group_grouplike(ga, g), group_grouplike(ga, h));
        REQUIRE(homs.size() == space.dim());
        Matrix evals(ga.algebra.dim(), homs.size());
        for (size_t k = 0; k < homs.size(); ++k) {
          // a comodule map lands its value at 1 inside the hom space
          const Vec at_one = homs[k].apply(ga.algebra.unit());
          CHECK(space.contains(at_one));
          // and is left multiplication by that value
          CHECK(homs[k] == ga.algebra.lmul(at_one));
          evals.set_col(k, at_one);
        }
        CHECK(rank(evals) == space.dim());
      }
  }
}

TEST_CASE("grouplike hom spaces compose like the algebra") {
  const GradedAlgebra ga = graded_c2();
  Coring c = graded_coring(ga);
  const Vec e = group_grouplike(ga, 0), s = group_grouplike(ga, 1);
  Subspace es = grouplike_hom_space(c, e, s);
  Subspace se = grouplike_hom_space(c, s, e);
  Subspace ee = grouplike_hom_space(c, e, e);
  for (size_t r = 0; r < es.dim(); ++r)
    for (size_t t = 0; t < se.dim(); ++t)
      CHECK(ee.contains(ga.algebra.mul(se.basis().row(t), es.basis().row(r))));
}

TEST_CASE("cotensor product of grouplike comodules picks one component") {
  const GradedAlgebra ga = graded_c2();
  Coring c = graded_coring(ga);
  Comodule m = comodule_from_grouplike(c, group_grouplike(ga, 0));
  LeftComodule ne = left_comodule_from_grouplike(c, group_grouplike(ga, 0));
  LeftComodule ns = left_comodule_from_grouplike(c, group_grouplike(ga, 1));
  CotensorResult r0 = cotensor(c, m, ne);
  CHECK(r0.subspace.dim() == 1);
  CotensorResult r1 = cotensor(c, m, ns);
  CHECK(r1.subspace.dim() == 1);
}

TEST_CASE("generation by grouplike comodules detects the strongly graded case") {
  const GradedAlgebra gc = graded_c2();
  Coring cc = graded_coring(gc);
  Comodule ce = comodule_from_grouplike(cc, group_grouplike(gc, 0));
  Comodule cs = comodule_from_grouplike(cc, group_grouplike(gc, 1));
  CHECK(is_generated_by(cc, ce, {cs}));
  CHECK(is_generated_by(cc, ce, {ce, cs}));

  const GradedAlgebra gt = graded_truncated();
  Coring ct = graded_coring(gt);
  Comodule te = comodule_from_grouplike(ct, group_grouplike(gt, 0));
  Comodule ts = comodule_from_grouplike(ct, group_grouplike(gt, 1));
  CHECK_FALSE(is_generated_by(ct, te, {ts}));
  CHECK(is_generated_by(ct, te, {te, ts}));
}
