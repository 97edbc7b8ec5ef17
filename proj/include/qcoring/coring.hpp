#pragma once

#include "qcoring/dual.hpp"
#include "qcoring/tensor.hpp"

namespace qcoring {

// Coassociative counital comonoid in (A, A)-bimodules. delta lands in the
// canonical coordinates of square = C (x)_A C; counit lands in A.
struct Coring {
  Algebra algebra = Algebra::rationals();
  Bimodule bimodule;
  BalancedTensor square;
  Matrix delta;   // square.dim() x dim()
  Matrix counit;  // algebra.dim() x dim()
  size_t dim() const { return bimodule.dim; }
};

BalancedTensor coring_square(const Algebra& a, const Bimodule& c);

// delta_ambient maps C into the dim*dim ambient of C (x) C.
Coring make_coring(const Algebra& a, const Bimodule& c, const Matrix& delta_ambient,
                   const Matrix& counit);

// Bimodule axioms, bilinearity of the structure maps, coassociativity through
// the two iterated triple products, both counit laws. Failures name the basis
// vector that witnesses them.
ValidationReport check_coring(const Coring& c);

// C = A with the canonical identifications A (x)_A A = A.
Coring trivial_coring(const Algebra& a);

// C = A (x) A with delta(a (x) a') = (a (x) 1) (x)_A (1 (x) a') and counit the
// multiplication.
Coring sweedler_coring(const Algebra& a);

// C with the two actions swapped, over the opposite algebra; delta picks up
// the flip of tensor factors.
Coring opposite_coring(const Coring& c);

struct Comodule {
  RightModule module;
  BalancedTensor product;  // M (x)_A C
  Matrix coaction;         // product.dim() x module.dim
};

struct LeftComodule {
  LeftModule module;
  BalancedTensor product;  // C (x)_A M
  Matrix coaction;
};

Comodule make_comodule(const Coring& c, const RightModule& m, const Matrix& coaction_ambient);
LeftComodule make_left_comodule(const Coring& c, const LeftModule& m,
                                const Matrix& coaction_ambient);

ValidationReport check_comodule(const Coring& c, const Comodule& m);
// Checked by translating to a comodule over the opposite coring.
ValidationReport check_left_comodule(const Coring& c, const LeftComodule& m);
Comodule opposite_comodule(const Coring& opposite_c, const LeftComodule& m);

// Canonical basis of the right A-linear maps commuting with the coactions.
std::vector<Matrix> comodule_hom(const Coring& c, const Comodule& m, const Comodule& n);

bool is_grouplike(const Coring& c, const Vec& g);

// The comodule structures a grouplike puts on A: coaction a -> 1 (x) g a on
// the right, a -> a g (x) 1 on the left.
Comodule comodule_from_grouplike(const Coring& c, const Vec& g);
LeftComodule left_comodule_from_grouplike(const Coring& c, const Vec& g);

// { b in A : h b == b g } inside A; isomorphic to the comodule homs between
// the grouplike comodules via left multiplication.
Subspace grouplike_hom_space(const Coring& c, const Vec& g, const Vec& h);

struct CotensorResult {
  BalancedTensor product;  // M (x)_A N
  Subspace subspace;       // cotensor in the product coordinates
};

// Equalizer of rho (x) N and M (x) lambda inside M (x)_A N.
CotensorResult cotensor(const Coring& c, const Comodule& m, const LeftComodule& n);

// True when the images of all comodule maps out of the family span m.
bool is_generated_by(const Coring& c, const Comodule& m, const std::vector<Comodule>& family);

}  // namespace qcoring
