// Search kernels behind the distance and geometry computations.
//
// Each kernel has a plain serial reference, kept for testing, and a
// production version that runs under OpenMP when `Exec::parallel` is
// requested and the library was built with it. Production results never
// depend on the thread schedule.

#ifndef LRC_KERNELS_HPP
#define LRC_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc::kernels {

enum class Exec { serial, parallel };

/// Number of worker threads the parallel kernels will use.
int max_threads();

struct MinWeight {
  std::size_t weight = 0;
  /// Mixed-radix index of the first minimum-weight coefficient vector
  /// (digit i is the rep of the coefficient on generator row i).
  std::uint64_t index = 0;
  std::vector<Elem> codeword;
  std::uint64_t visited = 0;
};

/// Minimum weight over the nonzero vectors of the row space of `gen`,
/// computing every codeword from scratch. Requires gen.rows() >= 1.
MinWeight min_weight_reference(const Matrix& gen);

/// Same answer as the reference; enumerates in blocks with incremental
/// codeword updates.
MinWeight min_weight_blocked(const Matrix& gen, Exec exec);

struct Dependency {
  /// Smallest s below the cap such that some s columns are dependent.
  std::optional<std::size_t> size;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Brute force over column subsets using rank(); for testing only.
Dependency smallest_dependency_reference(const Matrix& h, std::size_t cap);

/// Depth-first search over independent column sets with incremental
/// elimination, looking for a dependent set of size < cap. Stops with
/// budget_exhausted once more than `node_budget` sets were visited.
Dependency smallest_dependency(const Matrix& h, std::size_t cap, std::uint64_t node_budget,
                               Exec exec);

/// Lexicographically first dependent column subset of exactly `size`
/// columns, assuming every smaller subset is independent.
std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& h, std::size_t size);

/// Abstract line-family search problem: sets of lines in which each line
/// meets the others in at most `max_shared` distinct points.
struct FamilyProblem {
  std::size_t lines = 0;
  /// meet[i * lines + j] = index of the point common to lines i and j.
  std::vector<std::uint32_t> meet;
  std::size_t max_shared = 0;
  /// Every family searched contains this line.
  std::uint32_t fixed_line = 0;
};

struct FamilySearchOptions {
  std::uint64_t node_limit = 10'000'000;
  /// Also collect inclusion-maximal families (not only maximum size).
  bool collect_maximal = false;
};

struct FamilySearch {
  std::size_t best_size = 0;
  /// All families of size best_size, lexicographic in sorted line indices.
  std::vector<std::vector<std::uint32_t>> maximum;
  std::vector<std::vector<std::uint32_t>> maximal;
  std::uint64_t nodes = 0;
  bool complete = true;
};

FamilySearch search_families_reference(const FamilyProblem& problem,
                                       const FamilySearchOptions& options);
FamilySearch search_families(const FamilyProblem& problem, const FamilySearchOptions& options,
                             Exec exec);

}  // namespace lrc::kernels

#endif  // LRC_KERNELS_HPP
