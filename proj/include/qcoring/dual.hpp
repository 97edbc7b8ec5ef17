#pragma once

#include <optional>

#include "qcoring/module.hpp"

namespace qcoring {

// A ring acting on a fixed coordinate space, one matrix per ring basis
// element. Whether the maps form a left or a right action is up to the caller.
struct ModuleAction {
  RingDesc ring = Algebra::rationals();
  std::vector<Matrix> maps;
};

// Canonical basis of { X : X * ap[i] == aq[i] * X for all i }, each element a
// dq x dp matrix. Both right-linear and left-linear hom spaces have this shape.
std::vector<Matrix> intertwiners(const std::vector<Matrix>& ap, size_t dp,
                                 const std::vector<Matrix>& aq, size_t dq);

std::vector<Matrix> hom_right(const RingDesc& a, const RightModule& p, const RightModule& q);
std::vector<Matrix> hom_left(const RingDesc& a, const LeftModule& p, const LeftModule& q);

// Coordinates of f in a linearly independent list of matrices; throws when f
// is outside the span.
Vec coords_in_basis(const std::vector<Matrix>& basis, const Matrix& f);

// Right-linear functionals P -> A on a right A-module, with the left A and
// right T actions transported to the canonical coordinates.
struct DualModule {
  size_t dim = 0;
  std::vector<Matrix> functionals;  // canonical basis, each a.dim() x p.dim
  Bimodule bimodule;                // left A, right T
  Vec coords_of(const Matrix& f) const { return coords_in_basis(functionals, f); }
};

DualModule dual_module(const Algebra& a, const RightModule& p);  // T = Q
// t.maps[i] = left action of the i-th T basis element on P.
DualModule dual_module(const Algebra& a, const RightModule& p, const ModuleAction& t);

struct DualBasis {
  std::vector<Vec> elements;        // e_i in P
  std::vector<Matrix> functionals;  // e*_i : P -> A
};

// Finite dual basis from a splitting of the free cover on the generators;
// nullopt when the cover does not split, i.e. P is not projective. The
// overload without generators covers by the coordinate basis of P.
std::optional<DualBasis> dual_basis(const Algebra& a, const RightModule& p,
                                    const std::vector<Vec>& generators);
std::optional<DualBasis> dual_basis(const Algebra& a, const RightModule& p);

// Checks sum_i e_i * e*_i(p) == p on a basis and right-linearity of each e*_i.
ValidationReport verify_dual_basis(const Algebra& a, const RightModule& p, const DualBasis& db);

// Endomorphism algebra of a right module together with its left action on the
// module. Multiplication is composition, the unit is the identity map.
struct EndRing {
  Algebra ring = Algebra::rationals();
  ModuleAction action;        // left action of ring on the module
  std::vector<Matrix> basis;  // endomorphism matrices spanning the algebra
  Vec coords_of(const Matrix& f) const { return coords_in_basis(basis, f); }
};

EndRing end_ring(const RingDesc& a, const RightModule& p);

// Same packaging for any composition-closed space of endomorphisms containing
// the identity, e.g. the comodule endomorphisms of a comodule.
EndRing ring_from_endo_basis(std::vector<Matrix> basis, size_t dim);

struct FlatnessReport {
  bool projective = false;
  bool faithful = false;
  bool ok() const { return projective && faithful; }
};

// Finite-dimensional criterion: a unital module is faithfully flat iff it is
// projective and its semisimple reduction f / rad(r)f has annihilator exactly
// rad(r). Requires the idempotent sum to act as a unit on both r and f.
FlatnessReport is_faithfully_flat(const RingDesc& r, const LeftModule& f);

}  // namespace qcoring
