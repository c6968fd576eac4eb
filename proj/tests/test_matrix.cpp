#include <random>

#include "doctest.h"
#include "lrc/matrix.hpp"
#include "support.hpp"

using namespace lrc;

TEST_SUITE("matrix") {
  TEST_CASE("rank examples") {
    auto gf2 = Field::of_order(2);
    CHECK(rank(Matrix::identity(gf2, 3)) == 3);
    CHECK(rank(Matrix(gf2, 2, 4)) == 0);
    auto gf4 = Field::of_order(4);
    // w = 2, w^2 = 3
    CHECK(rank(Matrix::from_rows(gf4, {{1, 2, 3}, {2, 3, 1}})) == 1);
  }

  TEST_CASE("rref examples") {
    auto gf5 = Field::of_order(5);
    CHECK(rref(Matrix::identity(gf5, 4)) == Matrix::identity(gf5, 4));
    CHECK(rref(Matrix::from_rows(gf5, {{2, 4}, {1, 2}})) == Matrix::from_rows(gf5, {{1, 2}, {0, 0}}));
    std::vector<std::size_t> piv;
    rref(Matrix::from_rows(gf5, {{0, 1, 3}, {0, 2, 2}}), piv);
    CHECK(piv == std::vector<std::size_t>{1, 2});
  }

  TEST_CASE("null space examples") {
    auto gf2 = Field::of_order(2);
    CHECK(null_space(Matrix::identity(gf2, 5)).rows() == 0);
    CHECK(null_space(Matrix::from_rows(gf2, {{1, 1, 1}})) ==
          Matrix::from_rows(gf2, {{1, 1, 0}, {1, 0, 1}}));
  }

  TEST_CASE("submatrix minors") {
    auto gf5 = Field::of_order(5);
    const Matrix m = Matrix::from_rows(gf5, {{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 4, 4, 1}});
    const std::vector<std::size_t> r0{0}, c1{1};
    CHECK(submatrix_nonsingular(m, r0, c1));
    const std::vector<std::size_t> rows{0, 1}, dup{2, 2};
    CHECK_FALSE(submatrix_nonsingular(m, rows, dup));
    const std::vector<std::size_t> all{0, 1, 2}, vcols{0, 1, 3};
    CHECK(submatrix_nonsingular(m, all, vcols));  // Vandermonde on nodes 1, 2, 4
    CHECK_THROWS(submatrix_nonsingular(m, rows, all));
    const std::vector<std::size_t> bad{0, 7};
    CHECK_THROWS(submatrix_nonsingular(m, rows, bad));
  }

  TEST_CASE("random properties") {
    std::mt19937 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      auto f = Field::of_order(q);
      for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        const Matrix m = test::random_matrix(f, rows, cols, rng);
        const std::size_t rk = rank(m);
        const Matrix r = rref(m);
        const Matrix ker = null_space(m);
        CHECK(rk <= std::min(rows, cols));
        CHECK(rref(r) == r);
        CHECK(rank(m.vstack(r)) == rk);
        CHECK(cols == rk + ker.rows());
        if (ker.rows()) CHECK((m * ker.transpose()).is_zero());
        CHECK(rank(m.transpose()) == rk);
        // row swap and nonzero scaling keep the rank
        Matrix s = m;
        if (rows > 1)
          for (std::size_t c = 0; c < cols; ++c) std::swap(s(0, c), s(rows - 1, c));
        const Elem scale = 1 + rng() % (q - 1);
        for (std::size_t c = 0; c < cols; ++c) s(0, c) = f->mul(scale, s(0, c));
        CHECK(rank(s) == rk);
      }
    }
  }

  TEST_CASE("entries are validated") {
    auto f = Field::of_order(3);
    CHECK_THROWS(Matrix(f, 1, 2, {1, 3}));
    CHECK_THROWS(Matrix::from_rows(f, {{1, 2}, {1}}));
    CHECK(weight(std::vector<Elem>{0, 1, 0, 2}) == 2);
  }
}
