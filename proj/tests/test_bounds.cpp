#include <boost/multiprecision/cpp_dec_float.hpp>

#include "doctest.h"
#include "lrc/bounds.hpp"
#include "lrc/code.hpp"

using namespace lrc;
using Dec = boost::multiprecision::cpp_dec_float_50;

namespace {

// Floor in 50-digit arithmetic; values within 1e-30 of an integer are
// taken as that integer, since a perfect-square radicand evaluates to
// just above or below it.
std::int64_t decimal_floor(const Dec& v) {
  const Dec nearest = round(v);
  if (abs(v - nearest) < Dec("1e-30")) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(floor(v));
}

// Floors of the two Johnson length formulas in 50-digit decimal arithmetic.
std::pair<std::int64_t, std::int64_t> decimal_thm6(std::int64_t q, std::int64_t d) {
  const Dec Q = q, D = d, D1 = d + 1;
  const Dec gamma = (4 * D + 5) * pow(Q, 4) - (8 * D * D + 12 * D + 2) * pow(Q, 3) +
                    (4 * D * D * D + 6 * D * D - 1) * Q * Q - 2 * D1 * D1 * Q + pow(D1, 4);
  const Dec v16 = ((2 * D + 3) * Q * Q + Q + D1 * D1 - sqrt(gamma)) / (2 * D1 * D1);
  const Dec v17 = (D * (Q + 2) + 2 + Q * sqrt(4 * D1 * Q - (3 * D * D + 4 * D))) / (2 * D1);
  return {(d + 1) * decimal_floor(v16), (d + 1) * decimal_floor(v17)};
}

// Largest group count whose private-point code passes each Johnson
// inequality: length q^2+q+1-l(d+1), weight q-d, half-distance q-d-1.
std::pair<std::int64_t, std::int64_t> johnson_scan(std::int64_t q, std::int64_t d) {
  const std::int64_t w = q - d, dj = q - d - 1, pts = q * q + q + 1;
  std::int64_t best6 = 0, best7 = 0;
  for (std::int64_t l = 1; l * (d + 1) <= pts; ++l) {
    const std::int64_t n = pts - l * (d + 1);
    if (n < w) break;
    if (l * w * (w - 1) <= n * (n - 1)) best6 = l;
    const std::int64_t den = w * w - w * n + dj * n;
    if (den <= 0 || l * den <= dj * n) best7 = l;
  }
  return {(d + 1) * best6, (d + 1) * best7};
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("generalized Singleton-type bound") {
    CHECK(generalized_singleton_d(20, 7, 2, 3) == 8);
    CHECK(generalized_singleton_d(12, 5, 2, 2) == 6);
    for (std::int64_t n = 4; n < 12; ++n)
      for (std::int64_t k = 1; k < n; ++k) CHECK(generalized_singleton_d(n, k, k, 2) == n - k + 1);
    CHECK_THROWS_AS(generalized_singleton_d(5, 0, 1, 2), std::domain_error);
  }

  TEST_CASE("syndrome-count length bound") {
    CHECK(thm1_length_bound(4, 2, 3, 8) == 20);
    CHECK(thm1_length_bound(7, 2, 2, 5) == 6);
    CHECK(thm1_length_bound(4, 2, 2, 6) == 21);
    CHECK(group_count_bound(4, 3, 2, 3) == 5);
    // (2^1 - 1) / ((2 - 1) C(2, 2)) = 1
    CHECK(group_count_bound(2, 1, 1, 2) == 1);
    CHECK(group_count_bound(2, 1, 2, 2) == 0);
    CHECK_THROWS_AS(thm1_length_bound(4, 2, 3, 10), std::domain_error);
    for (std::int64_t q : {3, 4, 5, 7})
      for (std::int64_t r : {2, 3})
        for (std::int64_t delta : {2, 3})
          for (std::int64_t d : {2 * delta + 1, 2 * delta + 2, 3 * delta})
            CHECK(thm1_length_bound(q, r, delta, d) ==
                  (r + delta - 1) * group_count_bound(q, global_parity_rows(d, r, delta), r, delta));
  }

  TEST_CASE("earlier bound and r = 2 closed forms") {
    CHECK(cai_length_bound(4, 2, 3, 8) == 40);
    CHECK(cai_length_bound(4, 2, 2, 6) == 30);
    CHECK(cai_length_bound(7, 2, 2, 5) == 12);
    CHECK_THROWS_AS(cai_length_bound(7, 2, 2, 7), std::domain_error);
    CHECK(corollary_r2_bound(4, 3, 8) == 20);
    CHECK(corollary_r2_bound(8, 2, 5) == 9);
    CHECK(corollary_r2_bound(5, 2, 6) == 30);
    CHECK_THROWS_AS(corollary_r2_bound(5, 2, 7), std::domain_error);
  }

  TEST_CASE("non-sunflower incidence bound") {
    CHECK(thm5_bound(4, 3) == 20);
    CHECK(thm5_bound(9, 2) == 66);
    for (std::int64_t delta = 2; delta <= 8; ++delta)
      CHECK(thm5_bound(delta + 1, delta) == (delta + 1) * (delta + 2));
    CHECK_THROWS_AS(thm5_bound(3, 3), std::domain_error);
  }

  TEST_CASE("Johnson length bounds") {
    const auto b = thm6_bounds(5, 2);
    CHECK(b.pair == 21);
    CHECK(b.weight == 21);
    CHECK(thm6_bounds(9, 2).weight <= thm5_bound(9, 2));
    CHECK_THROWS_AS(thm6_bounds(4, 3), std::domain_error);
    for (std::int64_t delta = 2; delta <= 10; ++delta) {
      const auto e = thm6_bounds(delta + 2, delta);
      CHECK(e.pair >= (delta + 1) * (delta + 3));
      CHECK(e.weight >= (delta + 1) * (delta + 3));
    }
  }

  TEST_CASE("Johnson floors agree with decimal and scan oracles") {
    int points = 0;
    for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 49, 64}) {
      for (std::int64_t delta = 2; delta + 2 <= q; ++delta) {
        CAPTURE(q);
        CAPTURE(delta);
        const auto exact = thm6_bounds(q, delta);
        const auto dec = decimal_thm6(q, delta);
        CHECK(exact.pair == dec.first);
        CHECK(exact.weight == dec.second);
        const auto scan = johnson_scan(q, delta);
        CHECK(exact.pair == scan.first);
        CHECK(exact.weight == scan.second);
        ++points;
      }
    }
    CHECK(points > 100);
  }

  TEST_CASE("square-root floors at exact squares") {
    // floor((10 - sqrt(16)) / 3) = 2 and floor((4 + 2 sqrt(9)) / 5) = 2
    CHECK(floor_minus_sqrt(10, 16, 3) == 2);
    CHECK(floor_minus_sqrt(10, 15, 3) == 2);
    CHECK(floor_minus_sqrt(10, 17, 3) == 1);
    CHECK(floor_plus_scaled_sqrt(4, 2, 9, 5) == 2);
    CHECK(floor_plus_scaled_sqrt(5, 2, 9, 5) == 2);
    CHECK(floor_plus_scaled_sqrt(4, 2, 9, 10) == 1);
  }

  TEST_CASE("constant-weight Johnson bound") {
    const auto a = johnson_cw_bound(7, 2, 3);
    CHECK(a.bound6 == 7);
    REQUIRE(a.bound7);
    CHECK(*a.bound7 == 7);
    for (std::int64_t n = 3; n < 20; ++n)
      for (std::int64_t w = 1; w <= n; ++w) CHECK(johnson_cw_bound(n, w, w).bound6 == n / w);
    CHECK_FALSE(johnson_cw_bound(20, 2, 3).bound7);
    CHECK_THROWS_AS(johnson_cw_bound(3, 2, 4), std::domain_error);
  }

  TEST_CASE("report") {
    const auto r = bounds_report(4, 2, 3, 8);
    CHECK(r.best == 20);
    CHECK(r.u == 3);
    CHECK(r.find("thm1")->value == BigInt(20));
    CHECK(r.find("cai")->value == BigInt(40));
    CHECK(r.find("thm5")->value == BigInt(20));
    CHECK_FALSE(r.find("thm6_pair")->value);

    const auto odd = bounds_report(4, 2, 3, 7);
    CHECK(odd.find("corollary")->value == BigInt(5));
    CHECK(odd.find("corollary_grouped")->value == BigInt(4));
    CHECK(odd.find("thm1")->value == BigInt(4));
    CHECK(odd.best == 4);

    const auto r3 = bounds_report(5, 3, 3, 8);
    for (const auto& e : r3.entries) {
      CAPTURE(e.name);
      CHECK(e.value.has_value() == (e.name == "thm1" || e.name == "cai"));
    }
    CHECK_THROWS_AS(bounds_report(4, 2, 3, 20), std::domain_error);

    const auto row = tsv_row(r);
    CHECK(row.rfind("4\t2\t3\t8\t3\t20\t40\t20\t-\t20\t-\t-\t20\t", 0) == 0);
    CHECK(tsv_header().rfind("q\tr\tdelta\td\tu\t", 0) == 0);
    CHECK(table(r).find("best") != std::string::npos);
  }

  TEST_CASE("grid properties") {
    for (std::int64_t q : {3, 4, 5, 7, 8, 9})
      for (std::int64_t r : {2, 3, 4})
        for (std::int64_t delta : {2, 3, 4}) {
          if (q < delta + 1) continue;
          for (std::int64_t d : {2 * delta + 1, 2 * delta + 2, 3 * delta}) {
            CHECK(thm1_length_bound(q, r, delta, d) <= cai_length_bound(q, r, delta, d));
            if (r != 2 || d == 3 * delta) continue;
            if (d == 2 * delta + 2) {
              CHECK(corollary_r2_bound(q, delta, d) == thm1_length_bound(q, 2, delta, d));
            } else {
              CHECK(corollary_r2_bound(q, delta, d) >= thm1_length_bound(q, 2, delta, d));
              if ((q + 1) % (delta + 1) == 0)
                CHECK(corollary_r2_bound(q, delta, d) == thm1_length_bound(q, 2, delta, d));
            }
          }
          if (delta == 2 && r == 2)
            CHECK(thm1_length_bound(q, 2, 2, 6) == 3 * ((q * q + q + 1) / 3));
        }
  }
}
