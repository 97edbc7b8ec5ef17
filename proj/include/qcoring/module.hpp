#pragma once

#include "qcoring/algebra.hpp"

namespace qcoring {

// action[j] = matrix of the right action of the j-th ring basis element, so
// v·(ab) corresponds to act(b)·act(a)·v.
struct RightModule {
  size_t dim = 0;
  std::vector<Matrix> action;
};

// action[i] = left action of the i-th basis element; L_{ab} = L_a L_b.
struct LeftModule {
  size_t dim = 0;
  std::vector<Matrix> action;
};

struct Bimodule {
  size_t dim = 0;
  std::vector<Matrix> left_action;
  std::vector<Matrix> right_action;
};

Matrix act(const std::vector<Matrix>& action, const Vec& x);

RightModule regular_right_module(const Algebra& a);
LeftModule regular_left_module(const Algebra& a);
Bimodule regular_bimodule(const Algebra& a);

// The scalar action is the invisible outer structure of a one-sided module.
Bimodule as_bimodule_right(const RightModule& m);  // left ring Q
Bimodule as_bimodule_left(const LeftModule& m);    // right ring Q
RightModule right_module_of(const Bimodule& m);
LeftModule left_module_of(const Bimodule& m);

Bimodule opposite(const Bimodule& m);  // swap the two actions

ValidationReport check_right_module(const RingDesc& over, const RightModule& m);
ValidationReport check_left_module(const RingDesc& over, const LeftModule& m);
ValidationReport check_bimodule(const RingDesc& left, const RingDesc& right, const Bimodule& m);

struct DirectSum {
  std::vector<size_t> offsets;  // one per summand
  size_t total = 0;
  size_t offset(size_t i) const { return offsets[i]; }
  // block injection / projection matrices
  Matrix inject(size_t i, size_t part_dim) const;
  Matrix project(size_t i, size_t part_dim) const;
};

DirectSum direct_sum_layout(const std::vector<size_t>& dims);
RightModule direct_sum(const std::vector<RightModule>& parts);

}  // namespace qcoring
