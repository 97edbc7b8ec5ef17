#include "qcoring/module.hpp"

#include <stdexcept>

namespace qcoring {

Matrix act(const std::vector<Matrix>& action, const Vec& x) {
  if (action.size() != x.size()) throw std::invalid_argument("act: dimension mismatch");
  if (action.empty()) return Matrix(0, 0);
  Matrix m(action[0].rows(), action[0].cols());
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + action[i] * x[i];
  return m;
}

RightModule regular_right_module(const Algebra& a) {
  RightModule m{a.dim(), {}};
  for (size_t j = 0; j < a.dim(); ++j) m.action.push_back(a.rmul_basis(j));
  return m;
}

LeftModule regular_left_module(const Algebra& a) {
  LeftModule m{a.dim(), {}};
  for (size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.lmul_basis(i));
  return m;
}

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m{a.dim(), {}, {}};
  for (size_t i = 0; i < a.dim(); ++i) {
    m.left_action.push_back(a.lmul_basis(i));
    m.right_action.push_back(a.rmul_basis(i));
  }
  return m;
}

Bimodule as_bimodule_right(const RightModule& m) {
  return Bimodule{m.dim, {Matrix::identity(m.dim)}, m.action};
}

Bimodule as_bimodule_left(const LeftModule& m) {
  return Bimodule{m.dim, m.action, {Matrix::identity(m.dim)}};
}

RightModule right_module_of(const Bimodule& m) { return RightModule{m.dim, m.right_action}; }

LeftModule left_module_of(const Bimodule& m) { return LeftModule{m.dim, m.left_action}; }

Bimodule opposite(const Bimodule& m) { return Bimodule{m.dim, m.right_action, m.left_action}; }

namespace {

ValidationReport check_action(const RingDesc& over, size_t dim, const std::vector<Matrix>& action,
                              bool left) {
  ValidationReport rep;
  const size_t n = ring_dim(over);
  if (action.size() != n) {
    rep.fail("action has wrong arity");
    return rep;
  }
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim) {
      rep.fail("action matrix has wrong shape");
      return rep;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec prod = ring_mul(over, basis_vec(n, i), basis_vec(n, j));
      Matrix composite = left ? action[i] * action[j] : action[j] * action[i];
      if (act(action, prod) != composite)
        rep.fail(std::string(left ? "left" : "right") + " action not multiplicative at basis pair (" +
                 std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (act(action, ring_unit_sum(over)) != Matrix::identity(dim))
    rep.fail(std::string(left ? "left" : "right") + " action is not unital");
  return rep;
}

}  // namespace

ValidationReport check_right_module(const RingDesc& over, const RightModule& m) {
  return check_action(over, m.dim, m.action, false);
}

ValidationReport check_left_module(const RingDesc& over, const LeftModule& m) {
  return check_action(over, m.dim, m.action, true);
}

ValidationReport check_bimodule(const RingDesc& left, const RingDesc& right, const Bimodule& m) {
  ValidationReport rep;
  rep.merge(check_action(left, m.dim, m.left_action, true));
  rep.merge(check_action(right, m.dim, m.right_action, false));
  for (size_t i = 0; i < m.left_action.size(); ++i)
    for (size_t j = 0; j < m.right_action.size(); ++j)
      if (m.left_action[i] * m.right_action[j] != m.right_action[j] * m.left_action[i])
        rep.fail("left and right actions do not commute at basis pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
  return rep;
}

DirectSum direct_sum_layout(const std::vector<size_t>& dims) {
  DirectSum d;
  for (size_t dim : dims) {
    d.offsets.push_back(d.total);
    d.total += dim;
  }
  return d;
}

Matrix DirectSum::inject(size_t i, size_t part_dim) const {
  Matrix m(total, part_dim);
  for (size_t k = 0; k < part_dim; ++k) m(offsets[i] + k, k) = 1;
  return m;
}

Matrix DirectSum::project(size_t i, size_t part_dim) const {
  Matrix m(part_dim, total);
  for (size_t k = 0; k < part_dim; ++k) m(k, offsets[i] + k) = 1;
  return m;
}

RightModule direct_sum(const std::vector<RightModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: empty");
  std::vector<size_t> dims;
  for (const auto& p : parts) dims.push_back(p.dim);
  DirectSum layout = direct_sum_layout(dims);
  const size_t arity = parts[0].action.size();
  RightModule m{layout.total, std::vector<Matrix>(arity, Matrix(layout.total, layout.total))};
  for (size_t j = 0; j < arity; ++j)
    for (size_t p = 0; p < parts.size(); ++p) {
      if (parts[p].action.size() != arity) throw std::invalid_argument("direct_sum: arity mismatch");
      const Matrix& blk = parts[p].action[j];
      for (size_t r = 0; r < blk.rows(); ++r)
        for (size_t c = 0; c < blk.cols(); ++c)
          if (blk(r, c) != 0) m.action[j](layout.offsets[p] + r, layout.offsets[p] + c) = blk(r, c);
    }
  return m;
}

}  // namespace qcoring
