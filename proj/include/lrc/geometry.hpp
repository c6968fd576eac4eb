// The projective plane PG(2,q): points, lines, families of lines and their
// intersection structure.
//
// Points and lines are canonical triples whose leftmost nonzero coordinate
// is 1. A point P lies on the line with dual coordinates L iff
// P0 L0 + P1 L1 + P2 L2 = 0. Both sets are indexed in lexicographic order
// of their coordinate reps, which also gives an O(1) index formula.

#ifndef LRC_GEOMETRY_HPP
#define LRC_GEOMETRY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/gf.hpp"
#include "lrc/kernels.hpp"

namespace lrc {

using Triple = std::array<Elem, 3>;

struct ProjPoint {
  Triple coords;
  auto operator<=>(const ProjPoint&) const = default;
};

struct ProjLine {
  Triple dual;
  auto operator<=>(const ProjLine&) const = default;
};

/// Scales a nonzero triple so its leftmost nonzero entry is 1.
Triple normalize(const Field& f, Triple t);

ProjPoint make_point(const Field& f, Triple t);
ProjLine make_line(const Field& f, Triple t);

inline std::size_t plane_size(std::size_t q) { return q * q + q + 1; }

/// Position of a canonical triple in lexicographic order.
std::size_t canonical_index(const Field& f, const Triple& t);
Triple canonical_at(const Field& f, std::size_t index);

bool incident(const Field& f, const ProjPoint& p, const ProjLine& l);

std::vector<ProjPoint> enumerate_points(const Field& f);
std::vector<ProjLine> enumerate_lines(const Field& f);

/// The q+1 points of a line, in index order.
std::vector<ProjPoint> points_on(const Field& f, const ProjLine& l);
/// The q+1 lines through a point, in index order.
std::vector<ProjLine> lines_through(const Field& f, const ProjPoint& p);

/// Common point of two distinct lines (normalized cross product).
ProjPoint intersect(const Field& f, const ProjLine& a, const ProjLine& b);
/// Line through two distinct points.
ProjLine join(const Field& f, const ProjPoint& a, const ProjPoint& b);

/// Basis (u, v) of the 2-subspace of F_q^3 behind a line: its first two
/// points in index order.
std::pair<Triple, Triple> subspace_basis(const Field& f, const ProjLine& l);

class LineFamily {
 public:
  LineFamily(FieldPtr field, std::vector<ProjLine> lines);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }

 private:
  FieldPtr field_;
  std::vector<ProjLine> lines_;
};

/// t_i: distinct points of line i that lie on at least one other line.
std::vector<std::size_t> intersection_counts(const LineFamily& family);

/// max_i t_i <= q - delta. Throws std::domain_error when q < delta + 1.
bool satisfies_intersection_condition(const LineFamily& family, std::size_t delta);

/// Common point of every line, if any. Throws for fewer than two lines.
std::optional<ProjPoint> sunflower_center(const LineFamily& family);
bool is_sunflower(const LineFamily& family);

/// All q+1 lines through `center`.
LineFamily sunflower_family(const FieldPtr& field, const ProjPoint& center);

/// Points on line i lying on no other family line, in index order.
std::vector<ProjPoint> private_points(const LineFamily& family, std::size_t i);

struct IncidenceGrid {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(std::size_t r, std::size_t c) const { return bits[r * cols + c]; }
  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;
  /// Newline-separated rows of 0/1 characters.
  std::string to_text() const;
};

/// Rows follow family order, columns follow enumerate_points order.
IncidenceGrid incidence_matrix(const LineFamily& family);

struct ConstantWeightCode {
  std::size_t length = 0;
  std::size_t size = 0;
  std::size_t weight = 0;
  /// Measured minimum pairwise distance; absent with fewer than two rows.
  std::optional<std::size_t> distance;
  /// Pairs whose distance exceeds 2(q - delta - 1).
  std::size_t pairs_above_expected = 0;
  std::vector<std::vector<std::uint8_t>> rows;
  /// Point indices kept as columns.
  std::vector<std::size_t> columns;
};

/// Drops delta+1 private points per line (the first ones in index order)
/// from the incidence matrix and returns what is left as a binary
/// constant-weight code. Throws std::invalid_argument for a sunflower or
/// when a line has fewer than delta+1 private points.
ConstantWeightCode extract_constant_weight(const LineFamily& family, std::size_t delta);

enum class SearchMode { exhaustive, greedy };

struct SearchLimits {
  std::uint64_t node_limit = 10'000'000;
  bool collect_maximal = false;
};

struct FamilySearchResult {
  LineFamily best;
  /// Exhaustive mode: every family of the best size containing the first
  /// line. Greedy mode: just `best`.
  std::vector<LineFamily> maximum;
  /// Inclusion-maximal families containing the first line, when requested.
  std::vector<LineFamily> maximal;
  std::uint64_t nodes = 0;
  bool complete = true;
};

/// Largest families satisfying the intersection condition for delta.
/// Exhaustive search fixes the first line (every line is equivalent under
/// the collineation group) and walks the others in index order.
FamilySearchResult search_max_family(const FieldPtr& field, std::size_t delta, SearchMode mode,
                                     const SearchLimits& limits = {},
                                     kernels::Exec exec = kernels::Exec::parallel);

/// Search problem over all lines of PG(2,q) with max_shared = q - delta.
kernels::FamilyProblem family_problem(const Field& f, std::size_t delta);

}  // namespace lrc

#endif  // LRC_GEOMETRY_HPP
