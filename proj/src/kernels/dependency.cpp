#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "lrc/kernels.hpp"

namespace lrc::kernels {

namespace {

// Reduced copy of the column set: rref(H) without zero rows has the same
// column dependencies and fewer coordinates.
std::vector<std::vector<Elem>> reduced_columns(const Matrix& h) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(h, pivots);
  std::vector<std::vector<Elem>> cols(h.cols(), std::vector<Elem>(pivots.size()));
  for (std::size_t c = 0; c < h.cols(); ++c)
    for (std::size_t i = 0; i < pivots.size(); ++i) cols[c][i] = r(i, c);
  return cols;
}

// Basis kept in insertion-order echelon form: each new vector is reduced
// against all earlier ones before it is stored.
class Echelon {
 public:
  Echelon(const Field& f, std::size_t dim, std::size_t capacity)
      : f_(f), dim_(dim), vecs_(capacity * dim), pivot_(capacity) {}

  std::size_t size() const { return size_; }

  /// Reduces v in place; returns true iff v ends up zero.
  bool reduce(std::vector<Elem>& v) const {
    for (std::size_t b = 0; b < size_; ++b) {
      const Elem c = v[pivot_[b]];
      if (c == 0) continue;
      const Elem* bv = vecs_.data() + b * dim_;
      for (std::size_t i = 0; i < dim_; ++i)
        if (bv[i] != 0) v[i] = f_.sub(v[i], f_.mul(c, bv[i]));
    }
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
  }

  /// Pushes an already-reduced nonzero vector.
  void push(const std::vector<Elem>& v) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    const Elem s = f_.inv(v[p]);
    Elem* dst = vecs_.data() + size_ * dim_;
    for (std::size_t i = 0; i < dim_; ++i) dst[i] = f_.mul(s, v[i]);
    pivot_[size_] = p;
    ++size_;
  }
  void pop() { --size_; }

 private:
  const Field& f_;
  std::size_t dim_;
  std::vector<Elem> vecs_;
  std::vector<std::size_t> pivot_;
  std::size_t size_ = 0;
};

struct SearchShared {
  std::atomic<std::size_t> best;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::uint64_t budget;
};

class DependencySearch {
 public:
  DependencySearch(const Field& f, const std::vector<std::vector<Elem>>& cols, std::size_t dim,
                   SearchShared& shared)
      : cols_(cols), basis_(f, dim, dim + 1), scratch_(dim + 2, std::vector<Elem>(dim)),
        shared_(shared) {}

  ~DependencySearch() { flush(); }

  // Explores supersets of the current basis using columns >= start.
  void run(std::size_t start, std::size_t depth) {
    for (std::size_t j = start; j < cols_.size(); ++j)
      if (!visit(j, depth)) return;
  }

  // Tries column j on top of the current basis; false once this branch
  // can no longer improve the best size.
  bool visit(std::size_t j, std::size_t depth) {
    if (depth + 1 >= shared_.best.load(std::memory_order_relaxed)) return false;
    if (shared_.abort.load(std::memory_order_relaxed)) return false;
    if (++local_nodes_ == kFlushEvery) flush();
    auto& v = scratch_[depth];
    v = cols_[j];
    if (basis_.reduce(v)) {
      lower_best(depth + 1);
      return true;
    }
    if (depth + 2 < shared_.best.load(std::memory_order_relaxed)) {
      basis_.push(v);
      run(j + 1, depth + 1);
      basis_.pop();
    }
    return true;
  }

  void flush() {
    if (local_nodes_ == 0) return;
    const auto total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > shared_.budget) shared_.abort = true;
  }

 private:
  static constexpr std::uint64_t kFlushEvery = 4096;

  void lower_best(std::size_t s) {
    std::size_t cur = shared_.best.load();
    while (s < cur && !shared_.best.compare_exchange_weak(cur, s)) {
    }
  }

  const std::vector<std::vector<Elem>>& cols_;
  Echelon basis_;
  std::vector<std::vector<Elem>> scratch_;
  SearchShared& shared_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

Dependency smallest_dependency_reference(const Matrix& h, std::size_t cap) {
  Dependency out;
  const std::size_t n = h.cols();
  for (std::size_t s = 1; s < cap && s <= n; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ++out.nodes;
      if (rank(h.select_columns(idx)) < s) {
        out.size = s;
        return out;
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

Dependency smallest_dependency(const Matrix& h, std::size_t cap, std::uint64_t node_budget,
                               Exec exec) {
  const auto cols = reduced_columns(h);
  const std::size_t dim = cols.empty() ? 0 : cols.front().size();
  // Any dim+1 columns are dependent, so sizes beyond that never matter.
  cap = std::min(cap, dim + 2);

  SearchShared shared{};
  shared.best = cap;
  shared.budget = node_budget;

  const Field& f = h.field();
  const auto n = static_cast<std::int64_t>(cols.size());
  [[maybe_unused]] const bool parallel = exec == Exec::parallel;

  if (cap > 1) {
#pragma omp parallel if (parallel)
    {
      DependencySearch search(f, cols, dim, shared);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t j = 0; j < n; ++j) {
        // Column j is the smallest index of every subset in this branch.
        search.visit(static_cast<std::size_t>(j), 0);
      }
    }
  }

  Dependency out;
  out.nodes = shared.nodes.load();
  out.budget_exhausted = shared.abort.load();
  if (!out.budget_exhausted && shared.best.load() < cap) out.size = shared.best.load();
  return out;
}

std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& h, std::size_t size) {
  const auto cols = reduced_columns(h);
  const std::size_t dim = cols.empty() ? 0 : cols.front().size();
  if (size == 0 || size > cols.size()) return std::nullopt;
  if (size > dim + 1) size = dim + 1;

  const Field& f = h.field();
  Echelon basis(f, dim, dim + 1);
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Elem>> scratch(size + 1, std::vector<Elem>(dim));

  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    const std::size_t depth = chosen.size();
    auto& v = scratch[depth];
    for (std::size_t j = start; j + (size - depth) <= cols.size(); ++j) {
      v = cols[j];
      const bool dependent = basis.reduce(v);
      if (depth + 1 == size) {
        if (dependent) {
          chosen.push_back(j);
          return true;
        }
        continue;
      }
      if (dependent) continue;
      basis.push(v);
      chosen.push_back(j);
      if (self(self, j + 1)) return true;
      chosen.pop_back();
      basis.pop();
    }
    return false;
  };
  if (dfs(dfs, 0)) return chosen;
  return std::nullopt;
}

}  // namespace lrc::kernels
