#pragma once

#include <vector>

#include "qcoring/algebra.hpp"
#include "qcoring/graded.hpp"
#include "qcoring/module.hpp"

// Shared small examples. Basis conventions:
//   group_algebra_c2: Q[x]/(x^2-1), basis {1, x}
//   truncated_poly:   Q[x]/(x^2),   basis {1, x}

inline qcoring::Vec vecq(std::initializer_list<long> xs) {
  qcoring::Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline qcoring::Matrix matq(std::initializer_list<std::initializer_list<long>> rows) {
  qcoring::Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (long x : r) m(i, j++) = qcoring::Rat(x);
    ++i;
  }
  return m;
}

inline qcoring::Algebra group_algebra_c2() {
  std::vector<std::vector<qcoring::Vec>> s{{vecq({1, 0}), vecq({0, 1})},
                                           {vecq({0, 1}), vecq({1, 0})}};
  return qcoring::Algebra(s, vecq({1, 0}));
}

inline qcoring::Algebra truncated_poly() {
  std::vector<std::vector<qcoring::Vec>> s{{vecq({1, 0}), vecq({0, 1})},
                                           {vecq({0, 1}), vecq({0, 0})}};
  return qcoring::Algebra(s, vecq({1, 0}));
}

// (1+x)/2 generates a one-dimensional right ideal of Q[x]/(x^2-1); x acts as 1.
inline qcoring::RightModule idempotent_summand_plus() {
  return {1, {matq({{1}}), matq({{1}})}};
}

// Q as a right module over Q[x]/(x^2) through x -> 0.
inline qcoring::RightModule scalars_over_truncated() {
  return {1, {matq({{1}}), matq({{0}})}};
}

// The two-element-group grading with x in the nontrivial degree.
inline qcoring::GradedAlgebra graded_c2() {
  qcoring::GradedAlgebra g;
  g.algebra = group_algebra_c2();
  g.group = qcoring::cyclic_group(2);
  g.components = {qcoring::Subspace::span(2, matq({{1, 0}})),
                  qcoring::Subspace::span(2, matq({{0, 1}}))};
  return g;
}

// Same grading on Q[x]/(x^2); not strongly graded since x * x = 0.
inline qcoring::GradedAlgebra graded_truncated() {
  qcoring::GradedAlgebra g = graded_c2();
  g.algebra = truncated_poly();
  return g;
}
