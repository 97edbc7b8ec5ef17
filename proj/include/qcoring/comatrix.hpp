#pragma once

#include "qcoring/coring.hpp"

namespace qcoring {

// P* (x)_T P for a finitely generated projective right A-module P and a chosen
// subring T of its A-endomorphisms. The comultiplication inserts a finite dual
// basis between the tensor legs and the counit evaluates; the resulting maps
// do not depend on which dual basis gets inserted.
struct ComatrixCoring {
  Coring coring;
  RightModule module;
  DualBasis basis;
  EndRing middle;          // T, acting on the module from the left
  DualModule dual;         // P* as an (A, T)-bimodule
  BalancedTensor product;  // the quotient the coring lives on
};

// middle defaults to the full endomorphism ring End_A(P), the dual basis to
// one split off the coordinate cover. Throws std::invalid_argument when P has
// no finite dual basis, i.e. is not projective.
ComatrixCoring comatrix_coring(const Algebra& a, const RightModule& p);
ComatrixCoring comatrix_coring(const Algebra& a, const RightModule& p, const DualBasis& db);
ComatrixCoring comatrix_coring(const Algebra& a, const RightModule& p, const DualBasis& db,
                               const EndRing& middle);

// P over its own comatrix coring, rho(x) = sum_a e_a (x) (e*_a (x) x).
Comodule comatrix_comodule(const ComatrixCoring& c);

// Blockwise coaction on the direct sum of the underlying modules.
Comodule direct_sum_comodule(const Coring& c, const std::vector<Comodule>& members);

// All comodule maps between the members of a finite family, with composition
// as the product: block (p, q) holds Hom(members[p], members[q]), a map in
// (p, q) times a map in (p', p) composes into (p', q), and everything else
// multiplies to zero. The identity maps are the distinguished idempotents;
// their sum is a two-sided unit because the family is finite.
struct MatrixHomRing {
  IdemRing ring = IdemRing::from_algebra(Algebra::rationals());
  DirectSum layout;                                    // block per ordered pair
  std::vector<std::vector<std::vector<Matrix>>> homs;  // homs[p][q]
  size_t count = 0;

  size_t pair_block(size_t p, size_t q) const { return p * count + q; }
  // ring coordinates of a map members[p] -> members[q]; throws when the
  // matrix is not in the hom space
  Vec coords_of(size_t p, size_t q, const Matrix& t) const;
};

MatrixHomRing hom_ring(const Coring& c, const std::vector<Comodule>& members);

// Everything attached to a finite family of comodules with finitely generated
// projective underlying modules: the coproduct of the per-member comatrix
// corings over their comodule endomorphism rings, the subspace identifying a
// map's two tensor legs, the quotient coring, the hom ring R, and the two
// relative tensor products Sigma-dagger (x)_R Sigma and Sigma* (x)_T Sigma
// the quotient is compared against. The latter is built independently as the
// plain comatrix coring of Sigma over T = End(Sigma)-in-comodules, so the
// comparison maps carry real content.
struct FamilyAnalysis {
  Coring base;
  std::vector<Comodule> members;
  std::vector<DualBasis> bases;
  std::vector<EndRing> endos;        // comodule endomorphisms of each member
  std::vector<DualModule> duals;     // P* as (A, End-in-comodules)-bimodules
  std::vector<BalancedTensor> blocks;
  DirectSum block_layout;
  Coring coproduct;                  // direct sum of the blocks
  Subspace coideal = Subspace::zero(0);  // relations between overlapping blocks
  ValidationReport coideal_certificates;
  QuotientSpace quotient_map;
  Coring quotient;
  MatrixHomRing homring;             // R
  DirectSum sigma_layout;
  DirectSum dagger_layout;
  RightModule sigma;                 // direct sum of the members
  Comodule sigma_comodule;
  Bimodule sigma_ra;                 // Sigma as an (R, A)-bimodule
  Bimodule dagger_ar;                // Sigma-dagger as an (A, R)-bimodule
  std::vector<Matrix> dagger_functionals;  // dagger basis as maps Sigma -> A
  BalancedTensor middle_product;     // Sigma-dagger (x)_R Sigma
  Matrix gamma1;                     // coproduct -> middle product, blockwise
  Matrix gamma1_bar;                 // quotient -> middle product, bijective
  Coring middle;                     // middle product with transported structure
  EndRing sigma_endos;               // T, comodule endomorphisms of Sigma
  ComatrixCoring sigma_comatrix;     // Sigma* (x)_T Sigma
  Matrix gamma2;                     // middle product -> Sigma* (x)_T Sigma
  Matrix gamma_full;                 // quotient -> Sigma* (x)_T Sigma
};

// Throws std::invalid_argument when a member is not projective over the base
// algebra, std::logic_error when the quotient fails to land bijectively on
// Sigma-dagger (x)_R Sigma.
FamilyAnalysis analyze_family(const Coring& c, const std::vector<Comodule>& members);

// Kernel and image of the blockwise comparison, bijectivity of all three
// induced maps, and the coring morphism identities for each leg.
ValidationReport check_triangle(const FamilyAnalysis& f);

struct CanReport {
  Matrix matrix;
  size_t rank = 0;
  size_t codomain_dim = 0;
  bool bijective = false;
};

// can(phi (x) u) = sum phi(u_(0)) u_(1) : Sigma* (x)_T Sigma -> base coring.
CanReport canonical_map(const FamilyAnalysis& f);

// The same map out of any comatrix-shaped product into the coring the
// comodule coacts along; functionals[k] is the k-th basis vector of the left
// tensor leg as a map to A.
Matrix canonical_matrix(const Coring& c, const std::vector<Matrix>& functionals,
                        const Comodule& sigma, const BalancedTensor& product);

std::vector<Comodule> grouplike_members(const Coring& c, const std::vector<Vec>& gs);

// span{ a . g . b } over all algebra pairs and listed grouplikes: the image of
// the canonical map of the associated family, computed without any comatrix
// machinery.
Subspace grouplike_reachable_span(const Coring& c, const std::vector<Vec>& gs);

// For families of grouplike comodules the quotient has an explicit
// description: theta_g(x (x) y) = class(lmul(x) (x) y) in the block of g
// satisfies delta(theta_g(x (x) y)) = theta_g(x (x) 1) (x) theta_g(1 (x) y)
// and eps(theta_g(x (x) y)) = x y, and the classes fill the whole quotient.
// Members of f must be the grouplike comodules of gs, in order.
ValidationReport check_grouplike_display(const FamilyAnalysis& f, const std::vector<Vec>& gs);

// Hom(grouplike g, grouplike h) is left multiplication by { b : h b == b g },
// and composing maps multiplies the representing elements.
ValidationReport check_grouplike_hom_ring(const Coring& c, const std::vector<Vec>& gs);

// Sigma (x)_A Sigma-dagger with product (q (x) phi)(q' (x) phi') =
// q phi(q') (x) phi' is a ring isomorphic to End_A(Sigma) via
// q (x) phi -> q phi(-), with unit sum e_a (x) e*_a.
ValidationReport check_s_ring(const FamilyAnalysis& f);

// members[p] as a comodule over the quotient coring, coacting through
// rho(x) = sum_a e_a (x) class(e*_a (x) x).
Comodule member_over_middle(const FamilyAnalysis& f, size_t p);

struct MiddleDescent {
  MatrixHomRing barring;            // hom ring of the family over the quotient
  bool lambda_defined = false;      // base-colinear maps stay colinear there
  bool lambda_bijective = false;
  bool middle_can_bijective = false;
};

MiddleDescent middle_descent(const FamilyAnalysis& f);

struct DescentReport {
  bool members_fg_projective = false;
  bool can_bijective = false;
  bool sigma_faithfully_flat = false;  // Sigma as a left module over R
  bool base_flat = false;              // base coring projective as a left module
  bool generates_probes = false;
  bool small_projective = false;       // homs out of members lift along probe covers
  bool s_faithfully_flat = false;      // Sigma over its A-endomorphism ring
  bool middle_flat = false;            // quotient coring projective as a left module
  bool lambda_bijective = false;
  bool middle_can_bijective = false;
  std::vector<std::string> inconsistencies;
  bool consistent() const { return inconsistencies.empty(); }
  bool operator==(const DescentReport&) const = default;
};

// Evaluates every descent-style criterion on the family and cross-checks the
// equivalences that must hold between them; disagreements are reported in
// inconsistencies. The probe set stands in for the whole comodule category on
// the generator side, so it must contain witnesses for any failure the other
// criteria detect.
DescentReport descent_report(const FamilyAnalysis& f, const std::vector<Comodule>& probes);

}  // namespace qcoring
