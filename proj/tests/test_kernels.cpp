#include <random>

#include "doctest.h"
#include "lrc/geometry.hpp"
#include "lrc/kernels.hpp"
#include "support.hpp"

using namespace lrc;
using kernels::Exec;

TEST_SUITE("kernels") {
  TEST_CASE("blocked enumeration matches the reference") {
    std::mt19937 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
      auto f = Field::of_order(q);
      for (int trial = 0; trial < 25; ++trial) {
        const std::size_t k = 1 + rng() % (q <= 3 ? 9 : 5), n = k + rng() % 6;
        const Matrix g = test::random_matrix(f, k, n, rng);
        const auto ref = kernels::min_weight_reference(g);
        for (Exec e : {Exec::serial, Exec::parallel}) {
          const auto got = kernels::min_weight_blocked(g, e);
          CHECK(got.weight == ref.weight);
          CHECK(got.index == ref.index);
          CHECK(got.codeword == ref.codeword);
          CHECK(got.visited == ref.visited);
        }
      }
    }
  }

  TEST_CASE("dependency search matches brute force") {
    std::mt19937 rng(12);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      auto f = Field::of_order(q);
      for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng() % 6, n = 2 + rng() % 9;
        const Matrix h = test::random_matrix(f, rows, n, rng);
        for (std::size_t cap : {n + 1, std::size_t{3}, std::size_t{1}}) {
          const auto ref = kernels::smallest_dependency_reference(h, cap);
          for (Exec e : {Exec::serial, Exec::parallel}) {
            const auto got = kernels::smallest_dependency(h, cap, UINT64_MAX, e);
            CHECK(got.size == ref.size);
            CHECK_FALSE(got.budget_exhausted);
          }
        }
        const auto ref = kernels::smallest_dependency_reference(h, n + 1);
        if (ref.size) {
          const auto sub = kernels::first_dependent_subset(h, *ref.size);
          REQUIRE(sub);
          CHECK(sub->size() == *ref.size);
          CHECK(rank(h.select_columns(*sub)) < sub->size());
        }
      }
    }
  }

  TEST_CASE("dependency search reports an exhausted budget") {
    auto f = Field::of_order(3);
    const Matrix h = Matrix::identity(f, 12);
    const auto got = kernels::smallest_dependency(h, 13, 5, Exec::parallel);
    CHECK(got.budget_exhausted);
    CHECK_FALSE(got.size);
  }

  TEST_CASE("family search matches the reference") {
    for (auto [q, delta] : {std::pair{2u, 1u}, {3u, 1u}, {3u, 2u}, {4u, 2u}, {4u, 3u}, {5u, 3u}}) {
      CAPTURE(q);
      CAPTURE(delta);
      auto f = Field::of_order(q);
      const auto problem = family_problem(*f, delta);
      const auto ref = kernels::search_families_reference(problem, {UINT64_MAX, true});
      for (Exec e : {Exec::serial, Exec::parallel}) {
        const auto got = kernels::search_families(problem, {UINT64_MAX, true}, e);
        CHECK(got.complete);
        CHECK(got.best_size == ref.best_size);
        CHECK(got.maximum == ref.maximum);
        CHECK(got.maximal == ref.maximal);
        CHECK(got.nodes == ref.nodes);
      }
    }
  }

  TEST_CASE("truncated family search is schedule independent") {
    auto f = Field::of_order(5);
    const auto problem = family_problem(*f, 2);
    for (std::uint64_t limit : {1ull, 2ull, 50ull, 777ull, 5000ull}) {
      CAPTURE(limit);
      const auto s = kernels::search_families(problem, {limit, true}, Exec::serial);
      const auto p = kernels::search_families(problem, {limit, true}, Exec::parallel);
      CHECK_FALSE(s.complete);
      CHECK(s.complete == p.complete);
      CHECK(s.nodes == p.nodes);
      CHECK(s.nodes <= limit);
      CHECK(s.best_size == p.best_size);
      CHECK(s.maximum == p.maximum);
      CHECK(s.maximal == p.maximal);
    }
  }
}
