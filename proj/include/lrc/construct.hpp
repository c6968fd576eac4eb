// Optimal (r = 2, delta) LRCs from families of lines in PG(2,q).
//
// Group i of the code lives on line L_i: its top delta-1 rows hold a
// [delta+1, delta-1, 3] MDS block (I | p_i | q_i) and its three global rows
// hold a basis (u_i, v_i) of the 2-subspace behind L_i.

#ifndef LRC_CONSTRUCT_HPP
#define LRC_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/geometry.hpp"

namespace lrc {

struct GroupGeometry {
  ProjLine line;
  Triple u_vec{};
  Triple v_vec{};
  /// delta-1 pairs (a, b), both nonzero: the free points a*u + b*v.
  std::vector<std::pair<Elem, Elem>> coeffs;
};

/// Takes the first delta+1 private points of line i in index order; the
/// first two become u and v. Throws std::invalid_argument when fewer than
/// delta+1 private points exist.
GroupGeometry choose_free_subspaces(const LineFamily& family, std::size_t i, std::size_t delta);

/// p_m = b_m, q_m = -a_m. Throws std::invalid_argument on a zero input.
std::pair<std::vector<Elem>, std::vector<Elem>> solve_mds_columns(
    const Field& f, const std::vector<std::pair<Elem, Elem>>& coeffs);

/// Parity-check matrix with ell(delta-1)+3 rows and ell(delta+1) columns.
/// Needs at least two lines and the intersection condition for delta.
LinearCode lines_to_parity_check(const LineFamily& family, std::size_t delta);

/// The code of the q+1 lines through (1,0,0).
LinearCode sunflower_code(const FieldPtr& field, std::size_t delta);

struct StageTime {
  std::string stage;
  double ms = 0;
};

struct Certificate {
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;
  std::size_t r = 0, delta = 0, ell = 0;
  /// n - k - ell(delta-1), measured from the code.
  std::optional<std::int64_t> u;
  /// The count an optimal code must have, from (d, r, delta).
  std::optional<std::int64_t> u_expected;
  std::optional<std::int64_t> singleton_d;
  bool optimal = false;
  /// First stage that failed: "locality", "distance", "singleton" or "u".
  std::optional<std::string> failed_stage;
  std::string reason;
  std::optional<DistanceStrategy> strategy;
  std::vector<StageTime> stage_times;
};

/// Locality, exact distance, Singleton-type equality and the global row
/// count, in that order. Later stages are skipped after a failure. Throws
/// BudgetExceeded when the distance does not fit in `budget`.
Certificate verify_optimal_lrc(const LinearCode& code, std::size_t r, std::size_t delta,
                               std::uint64_t budget = kDefaultBudget,
                               kernels::Exec exec = kernels::Exec::parallel);

}  // namespace lrc

#endif  // LRC_CONSTRUCT_HPP
