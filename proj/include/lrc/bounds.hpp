// Closed-form distance and length bounds for optimal (r, delta) LRCs with
// disjoint repair groups, in exact integer arithmetic.
//
// Floors of expressions with square roots are resolved by integer
// comparisons on squares, never by floating point.

#ifndef LRC_BOUNDS_HPP
#define LRC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;

/// n - k + 1 - (ceil(k/r) - 1)(delta - 1).
std::int64_t generalized_singleton_d(std::int64_t n, std::int64_t k, std::int64_t r,
                                     std::int64_t delta);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt ipow(std::int64_t base, std::int64_t exp);
/// Floor division for a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Largest t with t*b <= a - sqrt(g); b > 0, g >= 0.
BigInt floor_minus_sqrt(const BigInt& a, const BigInt& g, const BigInt& b);
/// Largest t with t*b <= a + c*sqrt(s); b > 0, c >= 0, s >= 0.
BigInt floor_plus_scaled_sqrt(const BigInt& a, const BigInt& c, const BigInt& s, const BigInt& b);

/// Upper bound on the group count ell from distinct nonzero syndromes:
/// floor((q^u - 1) / ((q-1) C(r+delta-1, delta))).
BigInt group_count_bound(std::int64_t q, std::int64_t u, std::int64_t r, std::int64_t delta);

// The length bounds below throw std::domain_error outside their range.

/// (r+delta-1) * group_count_bound with u from global_parity_rows, for
/// d in {2delta+1, 2delta+2, 3delta}.
BigInt thm1_length_bound(std::int64_t q, std::int64_t r, std::int64_t delta, std::int64_t d);

/// Earlier bound (r+delta-1) floor(q^u / (r(q-1))), 2delta+1 <= d <= 3delta.
BigInt cai_length_bound(std::int64_t q, std::int64_t r, std::int64_t delta, std::int64_t d);

/// r = 2: q+1 for d = 2delta+1 and (delta+1) floor((q^2+q+1)/(delta+1))
/// for d = 2delta+2.
BigInt corollary_r2_bound(std::int64_t q, std::int64_t delta, std::int64_t d);

/// r = 2, d = 2delta+2, q >= delta+1: max of the sunflower length and the
/// non-sunflower incidence count.
BigInt thm5_bound(std::int64_t q, std::int64_t delta);

struct JohnsonLengthBounds {
  /// From the pair-count Johnson bound.
  BigInt pair;
  /// From the M(w^2 - wn + delta n) <= delta n form.
  BigInt weight;
};

/// r = 2, d = 2delta+2, q >= delta+2.
JohnsonLengthBounds thm6_bounds(std::int64_t q, std::int64_t delta);

struct JohnsonCw {
  BigInt bound6;
  std::optional<BigInt> bound7;
};

/// Johnson bounds on a binary (n, M, 2*delta; w) constant-weight code.
JohnsonCw johnson_cw_bound(std::int64_t n, std::int64_t delta, std::int64_t w);

struct BoundEntry {
  std::string name;
  std::optional<BigInt> value;  // absent = not applicable
  std::string basis;
};

struct BoundReport {
  std::int64_t q = 0, r = 0, delta = 0, d = 0;
  std::optional<std::int64_t> u;
  std::vector<BoundEntry> entries;
  BigInt best;
  std::vector<std::string> best_by;

  const BoundEntry* find(const std::string& name) const;
};

/// Evaluates every bound applicable to (q, r, delta, d). Throws
/// std::domain_error when none applies.
BoundReport bounds_report(std::int64_t q, std::int64_t r, std::int64_t delta, std::int64_t d);

std::string tsv_header();
std::string tsv_row(const BoundReport& report);
std::string table(const BoundReport& report);

}  // namespace lrc

#endif  // LRC_BOUNDS_HPP
