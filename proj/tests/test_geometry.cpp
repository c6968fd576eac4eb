#include <set>

#include "doctest.h"
#include "lrc/bounds.hpp"
#include "lrc/geometry.hpp"

using namespace lrc;
using kernels::Exec;

namespace {

// Points on a line by testing every canonical point.
std::vector<ProjPoint> points_by_scan(const Field& f, const ProjLine& l) {
  std::vector<ProjPoint> out;
  for (const auto& p : enumerate_points(f))
    if (incident(f, p, l)) out.push_back(p);
  return out;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("canonical indexing") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      auto f = Field::of_order(q);
      const auto pts = enumerate_points(*f);
      CHECK(pts.size() == plane_size(q));
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(canonical_index(*f, pts[i].coords) == i);
        CHECK(normalize(*f, pts[i].coords) == pts[i].coords);
      }
    }
    auto f3 = Field::of_order(3);
    CHECK(make_point(*f3, {0, 2, 1}).coords == Triple{0, 1, 2});
    CHECK_THROWS(normalize(*f3, {0, 0, 0}));
  }

  TEST_CASE("plane axioms") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      CAPTURE(q);
      auto f = Field::of_order(q);
      const auto pts = enumerate_points(*f);
      const auto lines = enumerate_lines(*f);
      CHECK(lines.size() == q * q + q + 1);
      bool ok = true;
      for (const auto& l : lines) {
        const auto on = points_on(*f, l);
        ok &= on.size() == q + 1 && on == points_by_scan(*f, l);
      }
      for (const auto& p : pts) ok &= lines_through(*f, p).size() == q + 1;
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          const auto x = intersect(*f, lines[i], lines[j]);
          ok &= incident(*f, x, lines[i]) && incident(*f, x, lines[j]);
          const ProjLine back = join(*f, pts[i], pts[j]);
          ok &= incident(*f, pts[i], back) && incident(*f, pts[j], back);
        }
      CHECK(ok);
    }
  }

  TEST_CASE("intersection examples") {
    auto f3 = Field::of_order(3);
    CHECK(intersect(*f3, {{1, 0, 0}}, {{0, 1, 0}}).coords == Triple{0, 0, 1});
    CHECK(intersect(*f3, {{1, 1, 0}}, {{1, 2, 0}}).coords == Triple{0, 0, 1});
    CHECK_THROWS(intersect(*f3, {{1, 1, 0}}, {{1, 1, 0}}));
    const auto sun = lines_through(*f3, {{1, 2, 2}});
    for (std::size_t i = 1; i < sun.size(); ++i)
      CHECK(intersect(*f3, sun[0], sun[i]).coords == Triple{1, 2, 2});
  }

  TEST_CASE("subspace basis spans the line") {
    auto f = Field::of_order(4);
    for (const auto& l : enumerate_lines(*f)) {
      const auto [u, v] = subspace_basis(*f, l);
      CHECK(incident(*f, {u}, l));
      CHECK(incident(*f, {v}, l));
      CHECK(u != v);
    }
  }

  TEST_CASE("intersection counts and condition") {
    auto f = Field::of_order(4);
    LineFamily single(f, {ProjLine{{1, 0, 0}}});
    CHECK(intersection_counts(single) == std::vector<std::size_t>{0});
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      auto fq = Field::of_order(q);
      const auto sun = sunflower_family(fq, {{1, 0, 0}});
      CHECK(sun.size() == q + 1);
      CHECK(is_sunflower(sun));
      const auto t = intersection_counts(sun);
      CHECK(std::all_of(t.begin(), t.end(), [](std::size_t x) { return x == 1; }));
      for (std::size_t delta = 1; delta + 1 <= q; ++delta)
        CHECK(satisfies_intersection_condition(sun, delta));
    }
    auto f2 = Field::of_order(2);
    LineFamily fano(f2, enumerate_lines(*f2));
    const auto t = intersection_counts(fano);
    CHECK(std::all_of(t.begin(), t.end(), [](std::size_t x) { return x == 3; }));
    CHECK_FALSE(is_sunflower(fano));
    CHECK(satisfies_intersection_condition(LineFamily(f, {}), 2));
    CHECK_THROWS_AS(satisfies_intersection_condition(single, 4), std::domain_error);

    // sunflower at q = delta + 1 plus a line missing the center
    auto f4 = Field::of_order(4);
    auto lines = sunflower_family(f4, {{1, 0, 0}}).lines();
    lines.push_back({{1, 0, 0}});
    LineFamily extra(f4, lines);
    CHECK_FALSE(satisfies_intersection_condition(extra, 3));
    CHECK(intersection_counts(extra).back() == 5);
  }

  TEST_CASE("families validate lines") {
    auto f = Field::of_order(3);
    CHECK_THROWS(LineFamily(f, {ProjLine{{1, 0, 0}}, ProjLine{{1, 0, 0}}}));
    CHECK_THROWS(LineFamily(f, {ProjLine{{2, 0, 0}}}));
    CHECK_THROWS(sunflower_center(LineFamily(f, {ProjLine{{1, 0, 0}}})));
    LineFamily triangle(f, {ProjLine{{1, 0, 0}}, ProjLine{{0, 1, 0}}, ProjLine{{0, 0, 1}}});
    CHECK_FALSE(is_sunflower(triangle));
    for (std::uint32_t q : {2u, 3u, 4u}) {
      auto fq = Field::of_order(q);
      CHECK_FALSE(is_sunflower(LineFamily(fq, enumerate_lines(*fq))));
    }
  }

  TEST_CASE("incidence matrix") {
    auto f4 = Field::of_order(4);
    const auto sun = sunflower_family(f4, {{1, 0, 0}});
    const auto g = incidence_matrix(sun);
    CHECK(g.rows == 5);
    CHECK(g.cols == 21);
    std::size_t full = 0;
    for (std::size_t r = 0; r < g.rows; ++r) CHECK(g.row_weight(r) == 5);
    for (std::size_t c = 0; c < g.cols; ++c) {
      if (g.col_weight(c) == 5) ++full;
      else CHECK(g.col_weight(c) <= 1);
    }
    CHECK(full == 1);
    CHECK(g.col_weight(canonical_index(*f4, {1, 0, 0})) == 5);

    const auto one = incidence_matrix(LineFamily(f4, {ProjLine{{0, 1, 3}}}));
    CHECK(one.row_weight(0) == 5);
    auto f5 = Field::of_order(5);
    const auto all = incidence_matrix(LineFamily(f5, enumerate_lines(*f5)));
    for (std::size_t c = 0; c < all.cols; ++c) CHECK(all.col_weight(c) == 6);
    const auto text = g.to_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(std::count(text.begin(), text.end(), '1') == 25);
  }

  TEST_CASE("private points") {
    auto f4 = Field::of_order(4);
    const auto sun = sunflower_family(f4, {{1, 0, 0}});
    for (std::size_t i = 0; i < sun.size(); ++i) {
      const auto priv = private_points(sun, i);
      CHECK(priv.size() == 4);
      for (const auto& p : priv) CHECK(p.coords != Triple{1, 0, 0});
    }
  }

  TEST_CASE("constant-weight extraction") {
    auto f5 = Field::of_order(5);
    const auto res = search_max_family(f5, 2, SearchMode::exhaustive, {10'000'000, true});
    std::size_t tested = 0;
    for (const auto& fam : res.maximal) {
      if (is_sunflower(fam)) continue;
      const auto cw = extract_constant_weight(fam, 2);
      CHECK(cw.weight == 3);
      CHECK(cw.size == fam.size());
      CHECK(cw.length == 31 - 3 * fam.size());
      REQUIRE(cw.distance);
      CHECK(*cw.distance == 4);
      CHECK(cw.pairs_above_expected == 0);
      for (const auto& row : cw.rows) CHECK(std::count(row.begin(), row.end(), 1) == 3);
      CHECK(BigInt(cw.size) <= johnson_cw_bound(cw.length, 2, 3).bound6);
      ++tested;
    }
    CHECK(tested > 0);
    CHECK_THROWS_AS(extract_constant_weight(sunflower_family(f5, {{1, 0, 0}}), 2),
                    std::invalid_argument);
    auto f4 = Field::of_order(4);
    LineFamily crowded(f4, enumerate_lines(*f4));
    CHECK_THROWS_AS(extract_constant_weight(crowded, 2), std::invalid_argument);
  }

  TEST_CASE("family search examples") {
    auto f4 = Field::of_order(4);
    const auto a = search_max_family(f4, 3, SearchMode::exhaustive);
    CHECK(a.complete);
    CHECK(a.best.size() == 5);
    CHECK(is_sunflower(a.best));
    CHECK(a.maximum.size() == 5);
    CHECK(group_count_bound(4, 3, 2, 3) == 5);

    auto f3 = Field::of_order(3);
    const auto b = search_max_family(f3, 2, SearchMode::exhaustive);
    CHECK(b.best.size() == 4);

    for (std::uint32_t q : {3u, 4u, 5u})
      for (std::size_t delta = 1; delta + 1 <= q; ++delta) {
        auto f = Field::of_order(q);
        const auto g = search_max_family(f, delta, SearchMode::greedy);
        const auto e = search_max_family(f, delta, SearchMode::exhaustive);
        CHECK(satisfies_intersection_condition(g.best, delta));
        CHECK(satisfies_intersection_condition(e.best, delta));
        CHECK(g.best.size() <= e.best.size());
      }
  }

  TEST_CASE("family search limits and schedules") {
    auto f5 = Field::of_order(5);
    const auto cut = search_max_family(f5, 2, SearchMode::exhaustive, {100, false});
    CHECK_FALSE(cut.complete);
    CHECK(cut.nodes <= 100);
    CHECK(satisfies_intersection_condition(cut.best, 2));
    const auto s = search_max_family(f5, 3, SearchMode::exhaustive, {}, Exec::serial);
    const auto p = search_max_family(f5, 3, SearchMode::exhaustive, {}, Exec::parallel);
    REQUIRE(s.maximum.size() == p.maximum.size());
    for (std::size_t i = 0; i < s.maximum.size(); ++i)
      CHECK(s.maximum[i].lines() == p.maximum[i].lines());
  }

  TEST_CASE("non-sunflower families respect the incidence bound") {
    for (auto [q, delta] : {std::pair{4u, 2u}, {5u, 2u}, {5u, 3u}}) {
      auto f = Field::of_order(q);
      const auto res = search_max_family(f, delta, SearchMode::exhaustive, {10'000'000, true});
      REQUIRE(res.complete);
      for (const auto& fam : res.maximal) {
        CHECK(satisfies_intersection_condition(fam, delta));
        const auto t = intersection_counts(fam);
        for (auto ti : t) CHECK(ti <= std::min<std::size_t>(fam.size() - 1, q + 1));
        if (fam.size() >= 2 && !is_sunflower(fam))
          CHECK(fam.size() <= (q * q + q + 1) / (delta + 2));
      }
    }
  }
}
