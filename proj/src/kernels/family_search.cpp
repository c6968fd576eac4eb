#include <algorithm>
#include <stdexcept>

#include "lrc/kernels.hpp"

namespace lrc::kernels {

namespace {

using Family = std::vector<std::uint32_t>;

void check_problem(const FamilyProblem& p) {
  if (p.meet.size() != p.lines * p.lines) throw std::invalid_argument("meet table has wrong size");
  if (p.fixed_line >= p.lines) throw std::invalid_argument("fixed line out of range");
}

// Incremental feasibility state: for every member, the distinct points it
// shares with the rest of the family.
class FamilyState {
 public:
  explicit FamilyState(const FamilyProblem& p) : p_(p) {}

  const Family& members() const { return members_; }

  bool can_add(std::uint32_t line) const { return check(line, nullptr); }

  bool add(std::uint32_t line) {
    std::vector<std::uint32_t> own;
    if (!check(line, &own)) return false;
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const auto pt = p_.meet[members_[i] * p_.lines + line];
      auto& s = shared_[i];
      if (std::find(s.begin(), s.end(), pt) == s.end()) {
        s.push_back(pt);
        touched.push_back(static_cast<std::uint32_t>(i));
      }
    }
    members_.push_back(line);
    shared_.push_back(std::move(own));
    undo_.push_back(std::move(touched));
    return true;
  }

  void pop() {
    for (auto i : undo_.back()) shared_[i].pop_back();
    undo_.pop_back();
    shared_.pop_back();
    members_.pop_back();
  }

  bool contains(std::uint32_t line) const {
    return std::find(members_.begin(), members_.end(), line) != members_.end();
  }

  bool is_maximal() const {
    for (std::uint32_t l = 0; l < p_.lines; ++l)
      if (!contains(l) && can_add(l)) return false;
    return true;
  }

  Family sorted() const {
    Family f = members_;
    std::sort(f.begin(), f.end());
    return f;
  }

 private:
  bool check(std::uint32_t line, std::vector<std::uint32_t>* own_out) const {
    std::vector<std::uint32_t> own;
    own.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const auto pt = p_.meet[members_[i] * p_.lines + line];
      if (std::find(own.begin(), own.end(), pt) == own.end()) {
        own.push_back(pt);
        if (own.size() > p_.max_shared) return false;
      }
      const auto& s = shared_[i];
      if (s.size() >= p_.max_shared && std::find(s.begin(), s.end(), pt) == s.end()) return false;
    }
    if (own_out) *own_out = std::move(own);
    return true;
  }

  const FamilyProblem& p_;
  Family members_;
  std::vector<std::vector<std::uint32_t>> shared_;
  std::vector<std::vector<std::uint32_t>> undo_;
};

struct Partial {
  std::size_t best = 0;
  std::vector<Family> maximum;
  std::vector<Family> maximal;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

class BranchSearch {
 public:
  BranchSearch(const FamilyProblem& p, const FamilySearchOptions& o, std::uint64_t cap)
      : p_(p), o_(o), cap_(cap), state_(p) {}

  /// Searches the subtree rooted at {fixed, second}.
  Partial run(std::uint32_t second) {
    state_.add(p_.fixed_line);
    if (state_.add(second)) dfs(second);
    return std::move(out_);
  }

  /// Processes the root {fixed} only.
  Partial root() {
    state_.add(p_.fixed_line);
    record();
    return std::move(out_);
  }

 private:
  void record() {
    const std::size_t size = state_.members().size();
    if (size > out_.best) {
      out_.best = size;
      out_.maximum.clear();
    }
    if (size == out_.best) out_.maximum.push_back(state_.sorted());
    if (o_.collect_maximal && state_.is_maximal()) out_.maximal.push_back(state_.sorted());
  }

  void dfs(std::uint32_t last) {
    if (out_.nodes >= cap_) {
      out_.truncated = true;
      return;
    }
    ++out_.nodes;
    record();
    for (std::uint32_t l = last + 1; l < p_.lines && !out_.truncated; ++l) {
      if (l == p_.fixed_line) continue;
      if (!state_.add(l)) continue;
      dfs(l);
      state_.pop();
    }
  }

  const FamilyProblem& p_;
  const FamilySearchOptions& o_;
  std::uint64_t cap_;
  FamilyState state_;
  Partial out_;
};

void merge(FamilySearch& acc, Partial&& part) {
  if (part.best > acc.best_size) {
    acc.best_size = part.best;
    acc.maximum = std::move(part.maximum);
  } else if (part.best == acc.best_size && part.best > 0) {
    acc.maximum.insert(acc.maximum.end(), std::make_move_iterator(part.maximum.begin()),
                       std::make_move_iterator(part.maximum.end()));
  }
  acc.maximal.insert(acc.maximal.end(), std::make_move_iterator(part.maximal.begin()),
                     std::make_move_iterator(part.maximal.end()));
  acc.nodes += part.nodes;
}

// Feasibility from scratch: count, for each member, the distinct points it
// shares with the others.
bool feasible_from_scratch(const FamilyProblem& p, const Family& fam) {
  for (auto a : fam) {
    std::vector<std::uint32_t> pts;
    for (auto b : fam)
      if (a != b) pts.push_back(p.meet[a * p.lines + b]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() > p.max_shared) return false;
  }
  return true;
}

}  // namespace

FamilySearch search_families_reference(const FamilyProblem& problem,
                                       const FamilySearchOptions& options) {
  check_problem(problem);
  FamilySearch out;
  Family fam{problem.fixed_line};

  auto visit = [&](const Family& f) {
    Family s = f;
    std::sort(s.begin(), s.end());
    ++out.nodes;
    if (s.size() > out.best_size) {
      out.best_size = s.size();
      out.maximum.clear();
    }
    if (s.size() == out.best_size) out.maximum.push_back(s);
    if (options.collect_maximal) {
      bool maximal = true;
      for (std::uint32_t l = 0; l < problem.lines && maximal; ++l) {
        if (std::find(f.begin(), f.end(), l) != f.end()) continue;
        Family g = f;
        g.push_back(l);
        if (feasible_from_scratch(problem, g)) maximal = false;
      }
      if (maximal) out.maximal.push_back(s);
    }
  };

  auto dfs = [&](auto&& self, std::uint32_t from) -> void {
    visit(fam);
    for (std::uint32_t l = from; l < problem.lines; ++l) {
      if (l == problem.fixed_line) continue;
      fam.push_back(l);
      if (feasible_from_scratch(problem, fam)) self(self, l + 1);
      fam.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

FamilySearch search_families(const FamilyProblem& problem, const FamilySearchOptions& options,
                             Exec exec) {
  check_problem(problem);
  FamilySearch out;
  if (options.node_limit == 0) {
    out.complete = false;
    return out;
  }

  Partial root = BranchSearch(problem, options, options.node_limit).root();
  root.nodes = 1;
  merge(out, std::move(root));

  // Branch b holds every family whose smallest non-fixed member is
  // seconds[b]; any pair of lines is feasible unless max_shared is zero.
  std::vector<std::uint32_t> seconds;
  {
    FamilyState s(problem);
    s.add(problem.fixed_line);
    for (std::uint32_t l = 0; l < problem.lines; ++l)
      if (l != problem.fixed_line && s.can_add(l)) seconds.push_back(l);
  }
  const std::uint64_t branch_cap = options.node_limit - 1;
  std::uint64_t remaining = branch_cap;

  if (exec == Exec::serial) {
    for (auto second : seconds) {
      Partial part = BranchSearch(problem, options, remaining).run(second);
      remaining -= part.nodes;
      const bool truncated = part.truncated;
      merge(out, std::move(part));
      if (truncated) {
        out.complete = false;
        break;
      }
    }
    return out;
  }

  std::vector<Partial> parts(seconds.size());
  const auto nb = static_cast<std::int64_t>(seconds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < nb; ++b)
    parts[b] = BranchSearch(problem, options, branch_cap).run(seconds[b]);

  // Replay the node budget in branch order so truncation matches the
  // serial run exactly.
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (parts[b].truncated || parts[b].nodes > remaining) {
      merge(out, BranchSearch(problem, options, remaining).run(seconds[b]));
      out.complete = false;
      break;
    }
    remaining -= parts[b].nodes;
    merge(out, std::move(parts[b]));
  }
  return out;
}

}  // namespace lrc::kernels
