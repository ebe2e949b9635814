#include <doctest.h>

#include "strdet/linalg.hpp"

using strdet::Matrix;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rank and nullspace") {
  const Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(strdet::rank(a) == 2);
  const Matrix n = strdet::nullspace(a);
  CHECK(n.cols() == 1);
  CHECK((a * n).is_zero());
  const Matrix l = strdet::left_nullspace(a);
  CHECK(l.rows() == 1);
  CHECK((l * a).is_zero());
}

TEST_CASE("zero-sized shapes") {
  const Matrix empty(0, 3);
  CHECK(strdet::rank(empty) == 0);
  CHECK(strdet::nullspace(empty) == Matrix::identity(3));
  const Matrix tall(4, 0);
  CHECK(strdet::nullspace(tall).cols() == 0);
  CHECK(strdet::left_nullspace(tall) == Matrix::identity(4));
  CHECK((Matrix(2, 0) * Matrix(0, 3)).is_zero());
}

TEST_CASE("exact solve") {
  const Matrix a = from_rows({{2, 1}, {1, 3}});
  const Matrix b = from_rows({{3}, {5}});
  auto x = strdet::solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK((*x)(0, 0) == strdet::Scalar(4, 5));
  const Matrix singular = from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(strdet::solve(singular, from_rows({{1}, {2}})));
  CHECK(strdet::column_space_contains(singular, from_rows({{7}, {7}})));
}

TEST_CASE("reduced echelon form is idempotent") {
  const Matrix a = from_rows({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}});
  const auto once = strdet::row_reduce(a);
  const auto twice = strdet::row_reduce(once.reduced);
  CHECK(once.reduced == twice.reduced);
  CHECK(once.pivots == twice.pivots);
}
