#pragma once

#include "qcoring/coring.hpp"

namespace qcoring {

struct FiniteGroup {
  size_t order = 1;
  std::vector<std::vector<size_t>> table = {{0}};  // table[i][j] = i*j
  size_t identity = 0;
  size_t mul(size_t i, size_t j) const { return table[i][j]; }
  size_t inverse(size_t i) const;
};

ValidationReport check_group(const FiniteGroup& g);
FiniteGroup cyclic_group(size_t n);
FiniteGroup klein_four_group();

// Grading = direct sum decomposition indexed by the group with
// A_g A_h inside A_gh and the unit in the identity component.
struct GradedAlgebra {
  Algebra algebra = Algebra::rationals();
  FiniteGroup group;
  std::vector<Subspace> components;
};

struct GradedModule {
  RightModule module;
  std::vector<Subspace> components;
};

ValidationReport check_graded_algebra(const GradedAlgebra& a);
ValidationReport check_graded_module(const GradedAlgebra& a, const GradedModule& m);

// Projections onto the components along each other; throws when the
// components do not decompose the space.
std::vector<Matrix> component_projectors(size_t dim, const std::vector<Subspace>& comps);

// A_g A_h = A_gh for all pairs, not merely an inclusion.
bool is_strongly_graded(const GradedAlgebra& a);

// The coring that encodes the grading: free left A-module on the group with
// basis vectors grouplike, e_g . a = a e_gh for homogeneous a of degree h.
// Coordinate (g, i) of the coring sits at index g * dim A + i.
Coring graded_coring(const GradedAlgebra& a);

// The grouplike of the g-th group element inside graded_coring(a).
Vec group_grouplike(const GradedAlgebra& a, size_t g);

// Dictionary between graded right modules and comodules over the graded
// coring: rho(m) = m (x) e_g for homogeneous m of degree g.
Comodule to_comodule(const GradedAlgebra& a, const Coring& c, const GradedModule& m);
GradedModule from_comodule(const GradedAlgebra& a, const Coring& c, const Comodule& m);

// Right module with components picked by degree: the shift [g]A has
// component A_{g^-1 h} in degree h.
GradedModule shifted_regular(const GradedAlgebra& a, size_t g);

}  // namespace qcoring
