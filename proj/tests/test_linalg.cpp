#include <doctest.h>

#include <random>

#include "mckay/linalg.hpp"

using namespace mckay;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zeros) {
  std::uniform_int_distribution<int> d(-3, 3), z(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zeros ? 0 : d(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix::identity(4)) == 1);
  CHECK(determinant(Matrix::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(Matrix::from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
}

TEST_CASE("rank nullity on random matrices") {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 6;
    auto m = random_matrix(rng, r, c, 5);
    auto k = kernel(m);
    CHECK(k.rows() == c);
    CHECK(rank(m) + k.cols() == c);
    if (!k.empty()) CHECK((m * k).is_zero());
    auto lk = left_kernel(m);
    CHECK(rank(m) + lk.rows() == r);
    if (!lk.empty()) CHECK((lk * m).is_zero());
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("solve and rref") {
  auto m = Matrix::from_rows({{2, 1}, {1, 3}});
  auto x = solve(m, {3, 5});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == make_rational(4, 5));
  CHECK(x[1] == make_rational(7, 5));
  auto e = rref(Matrix::from_rows({{0, 2, 4}, {0, 1, 2}, {1, 0, 1}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced(1, 2) == 2);
}

TEST_CASE("multiplicative determinant") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix(rng, 4, 4, 2), b = random_matrix(rng, 4, 4, 2);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("stacking") {
  auto a = Matrix::from_rows({{1, 2}});
  auto b = Matrix::from_rows({{3, 4}});
  CHECK(Matrix::vstack({a, b}, 2) == Matrix::from_rows({{1, 2}, {3, 4}}));
  CHECK(Matrix::hstack({a, b}, 1) == Matrix::from_rows({{1, 2, 3, 4}}));
  CHECK(Matrix::hstack({}, 3).rows() == 3);
}
