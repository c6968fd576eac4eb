// Linear codes given by a parity-check matrix: dimension, exact minimum
// distance, (r, delta) locality over consecutive repair groups, and the
// standard-form parity-check layout of an LRC with disjoint groups.

#ifndef LRC_CODE_HPP
#define LRC_CODE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/kernels.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class LinearCode {
 public:
  explicit LinearCode(Matrix parity_check);

  const FieldPtr& field_ptr() const { return h_.field_ptr(); }
  const Field& field() const { return h_.field(); }
  std::size_t n() const { return h_.cols(); }
  std::size_t k() const { return k_; }
  const Matrix& parity_check() const { return h_; }
  /// Canonical generator: the null-space basis of H, k x n.
  Matrix generator() const { return null_space(h_); }
  bool contains(std::span<const Elem> word) const;

 private:
  Matrix h_;
  std::size_t k_;
};

/// Raised for the zero code, whose minimum distance is undefined.
class DegenerateCode : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when neither distance strategy fits in the work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DistanceStrategy { enumeration, dependency };

const char* to_string(DistanceStrategy s);

struct DistanceResult {
  std::size_t d = 0;
  DistanceStrategy strategy = DistanceStrategy::enumeration;
  /// A nonzero codeword of weight d.
  std::vector<Elem> witness;
  std::uint64_t work = 0;
};

/// Exact minimum distance. Enumerates all q^k codewords when that fits in
/// `budget`; otherwise searches for the smallest dependent column set of H
/// with at most `budget` search nodes.
DistanceResult min_distance_exact(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                                  kernels::Exec exec = kernels::Exec::parallel);

DistanceResult min_distance_by_enumeration(const LinearCode& code,
                                           kernels::Exec exec = kernels::Exec::parallel);
DistanceResult min_distance_by_dependency(const LinearCode& code,
                                          std::uint64_t node_budget = UINT64_MAX,
                                          kernels::Exec exec = kernels::Exec::parallel);

/// True iff every t-1 columns of H are linearly independent.
bool verify_distance_at_least(const LinearCode& code, std::size_t t);

struct LrcProfile {
  std::size_t r = 0;
  std::size_t delta = 0;
  std::size_t ell = 0;
  /// Group i covers coordinates [i*(r+delta-1), (i+1)*(r+delta-1)).
  std::size_t group_size() const { return r + delta - 1; }
  std::vector<std::size_t> group(std::size_t i) const;
};

struct LocalityCheck {
  std::optional<LrcProfile> profile;
  std::optional<std::size_t> failed_group;
  std::string reason;

  bool ok() const { return profile.has_value(); }
};

/// Checks that every consecutive block of r+delta-1 coordinates carries an
/// [r+delta-1, r, delta] MDS punctured code. Throws std::invalid_argument
/// when r+delta-1 does not divide n.
LocalityCheck check_disjoint_rdelta_locality(const LinearCode& code, std::size_t r,
                                             std::size_t delta);

/// The punctured code on `coords`, as a code with its own parity-check matrix.
LinearCode puncture(const LinearCode& code, std::span<const std::size_t> coords);

bool is_singleton_optimal(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r,
                          std::int64_t delta);

/// Number of global parity rows u below the locality blocks of an optimal
/// code: u = d - 1 - (floor((d - delta) / (r + delta - 1)) + 1)(delta - 1).
/// Throws std::domain_error when the result is negative.
std::int64_t global_parity_rows(std::int64_t d, std::int64_t r, std::int64_t delta);

struct StandardFormParts {
  /// Per group, (delta-1) x r with every entry nonzero.
  std::vector<Matrix> q_blocks;
  /// Per group, u x r.
  std::vector<Matrix> v_blocks;
  std::size_t u = 0;
};

/// H = [ diag(I | Q_i) ; (0 | V_1) ... (0 | V_ell) ].
LinearCode assemble_standard_form(const StandardFormParts& parts, const FieldPtr& field,
                                  std::size_t r, std::size_t delta);

}  // namespace lrc

#endif  // LRC_CODE_HPP
