#include "lrc/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lrc {

Triple normalize(const Field& f, Triple t) {
  std::size_t lead = 0;
  while (lead < 3 && t[lead] == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("zero vector is not a projective point");
  const Elem s = f.inv(t[lead]);
  for (auto& x : t) x = f.mul(s, x);
  return t;
}

ProjPoint make_point(const Field& f, Triple t) { return {normalize(f, t)}; }
ProjLine make_line(const Field& f, Triple t) { return {normalize(f, t)}; }

std::size_t canonical_index(const Field& f, const Triple& t) {
  const std::size_t q = f.q();
  if (t[0] == 1) return 1 + q + t[1] * q + t[2];
  if (t[0] == 0 && t[1] == 1) return 1 + t[2];
  if (t[0] == 0 && t[1] == 0 && t[2] == 1) return 0;
  throw std::invalid_argument("triple is not in canonical form");
}

Triple canonical_at(const Field& f, std::size_t index) {
  const std::size_t q = f.q();
  if (index == 0) return {0, 0, 1};
  if (index <= q) return {0, 1, static_cast<Elem>(index - 1)};
  index -= 1 + q;
  if (index >= q * q) throw std::out_of_range("canonical index out of range");
  return {1, static_cast<Elem>(index / q), static_cast<Elem>(index % q)};
}

namespace {

Elem dot(const Field& f, const Triple& a, const Triple& b) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

Triple cross(const Field& f, const Triple& a, const Triple& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

// Canonical triples x with <x, t> = 0, in index order.
std::vector<Triple> orthogonal(const Field& f, const Triple& t) {
  const Triple n = normalize(f, t);
  // Two independent solutions: pick them by the position of the leading 1.
  Triple u{}, v{};
  if (n[0] == 1) {
    u = {f.neg(n[1]), 1, 0};
    v = {f.neg(n[2]), 0, 1};
  } else if (n[1] == 1) {
    u = {1, 0, 0};
    v = {0, f.neg(n[2]), 1};
  } else {
    u = {1, 0, 0};
    v = {0, 1, 0};
  }
  std::vector<Triple> out;
  out.reserve(f.q() + 1);
  out.push_back(normalize(f, v));
  for (Elem x = 0; x < f.q(); ++x) {
    Triple w{f.add(u[0], f.mul(x, v[0])), f.add(u[1], f.mul(x, v[1])),
             f.add(u[2], f.mul(x, v[2]))};
    out.push_back(normalize(f, w));
  }
  std::sort(out.begin(), out.end(), [&](const Triple& a, const Triple& b) {
    return canonical_index(f, a) < canonical_index(f, b);
  });
  return out;
}

}  // namespace

bool incident(const Field& f, const ProjPoint& p, const ProjLine& l) {
  return dot(f, p.coords, l.dual) == 0;
}

std::vector<ProjPoint> enumerate_points(const Field& f) {
  std::vector<ProjPoint> out(plane_size(f.q()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {canonical_at(f, i)};
  return out;
}

std::vector<ProjLine> enumerate_lines(const Field& f) {
  std::vector<ProjLine> out(plane_size(f.q()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {canonical_at(f, i)};
  return out;
}

std::vector<ProjPoint> points_on(const Field& f, const ProjLine& l) {
  std::vector<ProjPoint> out;
  for (const auto& t : orthogonal(f, l.dual)) out.push_back({t});
  return out;
}

std::vector<ProjLine> lines_through(const Field& f, const ProjPoint& p) {
  std::vector<ProjLine> out;
  for (const auto& t : orthogonal(f, p.coords)) out.push_back({t});
  return out;
}

ProjPoint intersect(const Field& f, const ProjLine& a, const ProjLine& b) {
  const Triple c = cross(f, a.dual, b.dual);
  if (c == Triple{0, 0, 0}) throw std::invalid_argument("identical lines have no unique meet");
  return {normalize(f, c)};
}

ProjLine join(const Field& f, const ProjPoint& a, const ProjPoint& b) {
  const Triple c = cross(f, a.coords, b.coords);
  if (c == Triple{0, 0, 0}) throw std::invalid_argument("identical points span no unique line");
  return {normalize(f, c)};
}

std::pair<Triple, Triple> subspace_basis(const Field& f, const ProjLine& l) {
  const auto pts = orthogonal(f, l.dual);
  return {pts[0], pts[1]};
}

LineFamily::LineFamily(FieldPtr field, std::vector<ProjLine> lines)
    : field_(std::move(field)), lines_(std::move(lines)) {
  if (!field_) throw std::invalid_argument("line family needs a field");
  std::set<ProjLine> seen;
  for (auto& l : lines_) {
    if (normalize(*field_, l.dual) != l.dual)
      throw std::invalid_argument("line dual coordinates must be normalized");
    for (auto x : l.dual)
      if (x >= field_->q()) throw std::invalid_argument("line coordinate outside the field");
    if (!seen.insert(l).second) throw std::invalid_argument("line family has a repeated line");
  }
}

std::vector<std::size_t> intersection_counts(const LineFamily& family) {
  const Field& f = family.field();
  const auto& lines = family.lines();
  std::vector<std::size_t> t(lines.size(), 0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::set<std::size_t> pts;
    for (std::size_t j = 0; j < lines.size(); ++j)
      if (j != i) pts.insert(canonical_index(f, intersect(f, lines[i], lines[j]).coords));
    t[i] = pts.size();
  }
  return t;
}

bool satisfies_intersection_condition(const LineFamily& family, std::size_t delta) {
  const std::size_t q = family.field().q();
  if (q < delta + 1) throw std::domain_error("intersection condition needs q >= delta + 1");
  const auto t = intersection_counts(family);
  return std::all_of(t.begin(), t.end(), [&](std::size_t ti) { return ti <= q - delta; });
}

std::optional<ProjPoint> sunflower_center(const LineFamily& family) {
  if (family.size() < 2) throw std::invalid_argument("sunflower test needs at least two lines");
  const Field& f = family.field();
  const auto& lines = family.lines();
  const ProjPoint c = intersect(f, lines[0], lines[1]);
  for (const auto& l : lines)
    if (!incident(f, c, l)) return std::nullopt;
  return c;
}

bool is_sunflower(const LineFamily& family) { return sunflower_center(family).has_value(); }

LineFamily sunflower_family(const FieldPtr& field, const ProjPoint& center) {
  return LineFamily(field, lines_through(*field, make_point(*field, center.coords)));
}

std::vector<ProjPoint> private_points(const LineFamily& family, std::size_t i) {
  const Field& f = family.field();
  const auto& lines = family.lines();
  if (i >= lines.size()) throw std::out_of_range("line index out of range");
  std::vector<ProjPoint> out;
  for (const auto& p : points_on(f, lines[i])) {
    bool shared = false;
    for (std::size_t j = 0; j < lines.size() && !shared; ++j)
      shared = j != i && incident(f, p, lines[j]);
    if (!shared) out.push_back(p);
  }
  return out;
}

std::size_t IncidenceGrid::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t c = 0; c < cols; ++c) w += at(r, c);
  return w;
}

std::size_t IncidenceGrid::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows; ++r) w += at(r, c);
  return w;
}

std::string IncidenceGrid::to_text() const {
  std::string s;
  s.reserve(rows * (cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) s += at(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

IncidenceGrid incidence_matrix(const LineFamily& family) {
  const Field& f = family.field();
  IncidenceGrid g;
  g.rows = family.size();
  g.cols = plane_size(f.q());
  g.bits.assign(g.rows * g.cols, 0);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (const auto& p : points_on(f, family.lines()[r]))
      g.bits[r * g.cols + canonical_index(f, p.coords)] = 1;
  return g;
}

ConstantWeightCode extract_constant_weight(const LineFamily& family, std::size_t delta) {
  const Field& f = family.field();
  const std::size_t q = f.q();
  if (q < delta + 1) throw std::domain_error("constant-weight extraction needs q >= delta + 1");
  if (family.size() >= 2 && is_sunflower(family))
    throw std::invalid_argument("constant-weight extraction is defined for non-sunflower families");

  std::vector<bool> drop(plane_size(q), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto priv = private_points(family, i);
    if (priv.size() < delta + 1)
      throw std::invalid_argument("line " + std::to_string(i) + " has only " +
                                  std::to_string(priv.size()) + " private points");
    for (std::size_t s = 0; s <= delta; ++s) drop[canonical_index(f, priv[s].coords)] = true;
  }

  const IncidenceGrid grid = incidence_matrix(family);
  ConstantWeightCode out;
  for (std::size_t c = 0; c < grid.cols; ++c)
    if (!drop[c]) out.columns.push_back(c);
  out.length = out.columns.size();
  out.size = family.size();
  out.weight = q - delta;
  for (std::size_t r = 0; r < grid.rows; ++r) {
    std::vector<std::uint8_t> row;
    row.reserve(out.length);
    for (auto c : out.columns) row.push_back(grid.at(r, c));
    out.rows.push_back(std::move(row));
  }
  for (const auto& row : out.rows) {
    const auto w = static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
    if (w != out.weight)
      throw std::logic_error("extracted row weight " + std::to_string(w) + " differs from q - delta");
  }

  const std::size_t expected = 2 * (q - delta - 1);
  for (std::size_t a = 0; a < out.rows.size(); ++a)
    for (std::size_t b = a + 1; b < out.rows.size(); ++b) {
      std::size_t dist = 0;
      for (std::size_t c = 0; c < out.length; ++c) dist += out.rows[a][c] != out.rows[b][c];
      if (!out.distance || dist < *out.distance) out.distance = dist;
      if (dist > expected) ++out.pairs_above_expected;
    }
  return out;
}

kernels::FamilyProblem family_problem(const Field& f, std::size_t delta) {
  const std::size_t q = f.q();
  if (q < delta + 1) throw std::domain_error("family search needs q >= delta + 1");
  const auto lines = enumerate_lines(f);
  kernels::FamilyProblem p;
  p.lines = lines.size();
  p.max_shared = q - delta;
  p.fixed_line = 0;
  p.meet.assign(p.lines * p.lines, 0);
  for (std::size_t i = 0; i < p.lines; ++i)
    for (std::size_t j = i + 1; j < p.lines; ++j) {
      const auto idx =
          static_cast<std::uint32_t>(canonical_index(f, intersect(f, lines[i], lines[j]).coords));
      p.meet[i * p.lines + j] = idx;
      p.meet[j * p.lines + i] = idx;
    }
  return p;
}

namespace {

LineFamily to_family(const FieldPtr& field, const std::vector<std::uint32_t>& idx) {
  std::vector<ProjLine> lines;
  lines.reserve(idx.size());
  for (auto i : idx) lines.push_back({canonical_at(*field, i)});
  return LineFamily(field, std::move(lines));
}

}  // namespace

FamilySearchResult search_max_family(const FieldPtr& field, std::size_t delta, SearchMode mode,
                                     const SearchLimits& limits, kernels::Exec exec) {
  const Field& f = *field;
  if (f.q() < delta + 1) throw std::domain_error("family search needs q >= delta + 1");

  if (mode == SearchMode::greedy) {
    std::vector<ProjLine> chosen;
    std::uint64_t checks = 0;
    for (const auto& l : enumerate_lines(f)) {
      chosen.push_back(l);
      ++checks;
      if (!satisfies_intersection_condition(LineFamily(field, chosen), delta)) chosen.pop_back();
    }
    LineFamily best(field, chosen);
    FamilySearchResult out{best, {best}, {}, checks, true};
    return out;
  }

  const auto problem = family_problem(f, delta);
  const auto found = kernels::search_families(
      problem, {limits.node_limit, limits.collect_maximal}, exec);
  FamilySearchResult out{
      found.maximum.empty() ? LineFamily(field, {}) : to_family(field, found.maximum.front()),
      {}, {}, found.nodes, found.complete};
  for (const auto& m : found.maximum) out.maximum.push_back(to_family(field, m));
  for (const auto& m : found.maximal) out.maximal.push_back(to_family(field, m));
  return out;
}

}  // namespace lrc
