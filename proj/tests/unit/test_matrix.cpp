#include <doctest.h>

#include <random>

#include "nang/matrix.hpp"

using namespace nang;

namespace {

template <class F>
BasicMatrix<F> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  BasicMatrix<F> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = F(d(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar text round trip") {
  for (const char* s : {"0", "1", "-3", "2/3", "-7/12"}) CHECK(to_string(parse_scalar(s)) == s);
  CHECK(to_string(parse_scalar("4/6")) == "2/3");
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("x"));
}

TEST_CASE("rref of a known matrix") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto e = mat_rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(mat_rank(m) == 2);
  Matrix ns = mat_nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).is_zero());
}

TEST_CASE("ragged and mismatched shapes are rejected") {
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(mat_inverse(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE_TEMPLATE("rank-nullity and solve properties", F, Scalar, Fp<7>, Fp<101>) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto a = random_matrix<F>(rng, r, c);
    auto ns = mat_nullspace(a);
    CHECK(mat_rank(a) + ns.cols() == c);
    CHECK((a * ns).is_zero());

    auto x = random_matrix<F>(rng, c, 2);
    auto b = a * x;
    auto sol = mat_solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * sol->particular == b);
  }
}

TEST_CASE_TEMPLATE("inverse property", F, Scalar, Fp<7>) {
  std::mt19937 rng(99);
  int invertible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 4;
    auto a = random_matrix<F>(rng, n, n);
    auto inv = mat_inverse(a);
    CHECK(inv.has_value() == (mat_rank(a) == n));
    if (inv) {
      ++invertible;
      CHECK(*inv * a == BasicMatrix<F>::identity(n));
      CHECK(a * *inv == BasicMatrix<F>::identity(n));
    }
  }
  CHECK(invertible > 0);
}

TEST_CASE("inconsistent system has no solution") {
  Matrix a = Matrix::from_rows({{1, 1}, {2, 2}});
  Matrix b = Matrix::from_rows({{1}, {3}});
  CHECK_FALSE(mat_solve(a, b).has_value());
}

TEST_CASE("prime field arithmetic") {
  using F = Fp<7>;
  CHECK(F(3) * F(5) == F(1));
  CHECK(F(3).inv() == F(5));
  CHECK(F(-1) == F(6));
  CHECK_THROWS(F(0).inv());
}
