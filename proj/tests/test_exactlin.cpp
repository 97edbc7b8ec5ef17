#include <random>

#include "doctest.h"
#include "qcoring/linalg.hpp"

using namespace qcoring;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const size_t r = rows.size();
  const size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  size_t i = 0;
  for (const auto& row : rows) {
    size_t j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix random_matrix(std::mt19937& rng, size_t r, size_t c) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = rat_frac(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parse and format") {
  CHECK(rat_str(rat_parse("3/6")) == "1/2");
  CHECK(rat_str(rat_parse("-4/2")) == "-2");
  CHECK(rat_str(rat_parse("0")) == "0");
  CHECK(rat_parse("2/-4") == Rat(-1, 2));
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("rref on frozen examples") {
  SUBCASE("identity is fixed") {
    auto r = rref(Matrix::identity(3));
    CHECK(r.mat == Matrix::identity(3));
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
  }
  SUBCASE("zero matrix") {
    auto r = rref(Matrix(2, 3));
    CHECK(r.mat == Matrix(2, 3));
    CHECK(r.pivots.empty());
  }
  SUBCASE("[[2,4],[1,2]] reduces to [[1,2],[0,0]]") {
    auto r = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r.mat == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<size_t>{0});
  }
}

TEST_CASE("rref properties on random matrices") {
  std::mt19937 rng(20240817);
  for (int t = 0; t < 25; ++t) {
    Matrix m = random_matrix(rng, 1 + t % 5, 1 + (t * 7) % 6);
    auto r1 = rref(m);
    auto r2 = rref(r1.mat);
    CHECK(r1.mat == r2.mat);  // idempotent
    CHECK(r1.pivots == r2.pivots);
    CHECK(r1.pivots.size() == rank(m));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel_basis") {
  SUBCASE("identity has zero kernel") { CHECK(kernel_basis(Matrix::identity(4)) == Subspace::zero(4)); }
  SUBCASE("zero map has full kernel") { CHECK(kernel_basis(Matrix(3, 3)) == Subspace::full(3)); }
  SUBCASE("[[1,2]] kernel is span{(-2,1)}") {
    auto k = kernel_basis(mat({{1, 2}}));
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(2, mat({{-2, 1}})));
  }
  SUBCASE("random: m * v = 0 for every kernel basis vector") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
      Matrix m = random_matrix(rng, 2 + t % 4, 2 + (t * 5) % 5);
      auto k = kernel_basis(m);
      CHECK(k.dim() == m.cols() - rank(m));
      for (size_t i = 0; i < k.dim(); ++i) CHECK(vec_is_zero(m.apply(k.basis().row(i))));
    }
  }
}

TEST_CASE("solve_right") {
  SUBCASE("identity system") {
    auto x = solve_right(Matrix::identity(2), mat({{3}, {4}}));
    REQUIRE(x.has_value());
    CHECK(*x == mat({{3}, {4}}));
  }
  SUBCASE("inconsistent system") {
    CHECK_FALSE(solve_right(Matrix(2, 2), mat({{1}, {0}})).has_value());
  }
  SUBCASE("underdetermined picks free variables zero") {
    auto x = solve_right(mat({{1, 1}}), mat({{1}}));
    REQUIRE(x.has_value());
    CHECK(*x == mat({{1}, {0}}));
  }
  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(solve_right(Matrix(2, 2), Matrix(3, 1)), std::invalid_argument);
  }
  SUBCASE("random consistent systems round-trip") {
    std::mt19937 rng(99);
    for (int t = 0; t < 25; ++t) {
      Matrix a = random_matrix(rng, 3, 2 + t % 3);
      Matrix x0 = random_matrix(rng, a.cols(), 2);
      Matrix b = a * x0;
      auto x = solve_right(a, b);
      REQUIRE(x.has_value());
      CHECK(a * *x == b);
    }
  }
}

TEST_CASE("quotient_space") {
  SUBCASE("ambient 2 by span{(1,1)}") {
    auto q = quotient_space(2, Subspace::span(2, mat({{1, 1}})));
    CHECK(q.dim() == 1);
    CHECK(q.projection * q.section == Matrix::identity(1));
    CHECK(q.projection(0, 0) == -q.projection(0, 1));
    CHECK(vec_is_zero(q.projection.apply({Rat(1), Rat(1)})));
  }
  SUBCASE("zero subspace gives identity quotient") {
    auto q = quotient_space(3, Subspace::zero(3));
    CHECK(q.projection == Matrix::identity(3));
    CHECK(q.section == Matrix::identity(3));
  }
  SUBCASE("random: projection kills exactly the subspace") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 20; ++t) {
      const size_t n = 3 + t % 4;
      auto w = Subspace::span(n, random_matrix(rng, 1 + t % 3, n));
      auto q = quotient_space(n, w);
      CHECK(q.dim() == n - w.dim());
      CHECK(q.projection * q.section == Matrix::identity(q.dim()));
      CHECK(kernel_basis(q.projection) == w);
      for (size_t i = 0; i < w.dim(); ++i) CHECK(vec_is_zero(q.projection.apply(w.basis().row(i))));
    }
  }
}

TEST_CASE("kron") {
  SUBCASE("kron with identity-1 is identity") {
    Matrix a = mat({{1, 2}, {3, 4}});
    CHECK(kron(Matrix::identity(1), a) == a);
    CHECK(kron(a, Matrix::identity(1)) == a);
  }
  SUBCASE("index convention (i,j) -> i*dim2+j") {
    Matrix a = mat({{0, 1}, {0, 0}});
    Matrix b = mat({{2, 0}, {0, 3}});
    Matrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == 2);
    CHECK(k(1, 3) == 3);
    CHECK(k(2, 0) == 0);
  }
  SUBCASE("mixed product property") {
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
      Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 2);
      Matrix c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 3);
      CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
  }
  SUBCASE("associativity") {
    std::mt19937 rng(6);
    Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("subspace operations") {
  auto u = Subspace::span(3, mat({{1, 0, 1}}));
  auto v = Subspace::span(3, mat({{0, 1, 1}}));
  auto s = u.sum(v);
  CHECK(s.dim() == 2);
  CHECK(s.contains(u));
  CHECK(s.contains(v));
  CHECK_FALSE(u.contains(v));
  CHECK(u.contains({Rat(2), Rat(0), Rat(2)}));
  CHECK_FALSE(u.contains({Rat(1), Rat(1), Rat(1)}));
  SUBCASE("SpanBuilder agrees with batch span") {
    std::mt19937 rng(42);
    for (int t = 0; t < 15; ++t) {
      Matrix m = random_matrix(rng, 4, 5);
      SpanBuilder sb(5);
      for (size_t i = 0; i < m.rows(); ++i) sb.insert(m.row(i));
      CHECK(sb.subspace() == Subspace::span(5, m));
    }
  }
}
