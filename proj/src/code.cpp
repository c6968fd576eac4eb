#include "lrc/code.hpp"

#include <numeric>

#include "lrc/bounds.hpp"

namespace lrc {

LinearCode::LinearCode(Matrix parity_check) : h_(std::move(parity_check)) {
  if (!h_.field_ptr()) throw std::invalid_argument("parity-check matrix has no field");
  k_ = h_.cols() - rank(h_);
}

bool LinearCode::contains(std::span<const Elem> word) const {
  const auto syndrome = h_.apply(word);
  return std::all_of(syndrome.begin(), syndrome.end(), [](Elem e) { return e == 0; });
}

const char* to_string(DistanceStrategy s) {
  return s == DistanceStrategy::enumeration ? "enumeration" : "dependency";
}

namespace {

std::uint64_t codeword_count(const LinearCode& code, std::uint64_t cap) {
  // q^k, saturating at cap + 1.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (total > cap / code.field().q()) return cap + 1;
    total *= code.field().q();
  }
  return total;
}

void require_nonzero_code(const LinearCode& code) {
  if (code.k() == 0) throw DegenerateCode("minimum distance of the zero code is undefined");
}

std::vector<Elem> witness_on(const LinearCode& code, const std::vector<std::size_t>& support) {
  const Matrix sub = code.parity_check().select_columns(support);
  const Matrix ker = null_space(sub);
  if (ker.rows() == 0) throw std::logic_error("dependent column set has trivial kernel");
  std::vector<Elem> word(code.n(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) word[support[i]] = ker(0, i);
  return word;
}

}  // namespace

DistanceResult min_distance_by_enumeration(const LinearCode& code, kernels::Exec exec) {
  require_nonzero_code(code);
  const auto mw = kernels::min_weight_blocked(code.generator(), exec);
  DistanceResult out;
  out.d = mw.weight;
  out.strategy = DistanceStrategy::enumeration;
  out.witness = mw.codeword;
  out.work = mw.visited;
  return out;
}

DistanceResult min_distance_by_dependency(const LinearCode& code, std::uint64_t node_budget,
                                          kernels::Exec exec) {
  require_nonzero_code(code);
  const Matrix& h = code.parity_check();
  const auto dep = kernels::smallest_dependency(h, code.n() + 1, node_budget, exec);
  if (dep.budget_exhausted)
    throw BudgetExceeded("column-dependency search exceeded " + std::to_string(node_budget) +
                         " nodes");
  if (!dep.size) throw std::logic_error("no dependent column set in a code with k >= 1");
  const auto support = kernels::first_dependent_subset(h, *dep.size);
  if (!support) throw std::logic_error("dependent subset vanished on replay");

  DistanceResult out;
  out.d = *dep.size;
  out.strategy = DistanceStrategy::dependency;
  out.witness = witness_on(code, *support);
  out.work = dep.nodes;
  return out;
}

DistanceResult min_distance_exact(const LinearCode& code, std::uint64_t budget,
                                  kernels::Exec exec) {
  require_nonzero_code(code);
  if (codeword_count(code, budget) <= budget) return min_distance_by_enumeration(code, exec);
  try {
    return min_distance_by_dependency(code, budget, exec);
  } catch (const BudgetExceeded&) {
    throw BudgetExceeded("distance needs more than " + std::to_string(budget) +
                         " work units with both enumeration (q^k) and dependency search");
  }
}

bool verify_distance_at_least(const LinearCode& code, std::size_t t) {
  if (t <= 1) return true;
  const auto dep = kernels::smallest_dependency(code.parity_check(), t, UINT64_MAX,
                                                kernels::Exec::parallel);
  return !dep.size.has_value();
}

std::vector<std::size_t> LrcProfile::group(std::size_t i) const {
  std::vector<std::size_t> idx(group_size());
  std::iota(idx.begin(), idx.end(), i * group_size());
  return idx;
}

LinearCode puncture(const LinearCode& code, std::span<const std::size_t> coords) {
  const Matrix g = code.generator().select_columns(coords);
  std::vector<std::size_t> pivots;
  const Matrix r = rref(g, pivots);
  std::vector<std::size_t> nonzero(pivots.size());
  std::iota(nonzero.begin(), nonzero.end(), 0);
  const Matrix gen = pivots.empty() ? Matrix(code.field_ptr(), 0, coords.size())
                                    : r.select_rows(nonzero);
  // Parity check of the punctured code = null space of its generator.
  if (gen.rows() == 0) return LinearCode(Matrix::identity(code.field_ptr(), coords.size()));
  return LinearCode(null_space(gen));
}

LocalityCheck check_disjoint_rdelta_locality(const LinearCode& code, std::size_t r,
                                             std::size_t delta) {
  if (r < 1 || delta < 2) throw std::invalid_argument("locality needs r >= 1 and delta >= 2");
  const std::size_t size = r + delta - 1;
  if (code.n() % size != 0)
    throw std::invalid_argument("r + delta - 1 must divide the code length");

  LocalityCheck out;
  const std::size_t ell = code.n() / size;
  if (ell == 0) {
    out.reason = "code has no repair groups";
    return out;
  }
  LrcProfile profile{r, delta, ell};
  for (std::size_t i = 0; i < ell; ++i) {
    const auto coords = profile.group(i);
    const LinearCode local = puncture(code, coords);
    if (local.k() != r) {
      out.failed_group = i;
      out.reason = "group " + std::to_string(i) + " has local dimension " +
                   std::to_string(local.k()) + ", expected " + std::to_string(r);
      return out;
    }
    const std::size_t d = min_distance_exact(local, kDefaultBudget, kernels::Exec::serial).d;
    if (d != delta) {
      out.failed_group = i;
      out.reason = "group " + std::to_string(i) + " has local distance " + std::to_string(d) +
                   ", expected " + std::to_string(delta);
      return out;
    }
  }
  out.profile = profile;
  return out;
}

bool is_singleton_optimal(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r,
                          std::int64_t delta) {
  return d == generalized_singleton_d(n, k, r, delta);
}

std::int64_t global_parity_rows(std::int64_t d, std::int64_t r, std::int64_t delta) {
  if (r < 1 || delta < 2 || d < delta)
    throw std::domain_error("parity-row count needs r >= 1, delta >= 2, d >= delta");
  const std::int64_t u = d - 1 - ((d - delta) / (r + delta - 1) + 1) * (delta - 1);
  if (u < 0) throw std::domain_error("parameters admit no optimal code (negative u)");
  return u;
}

LinearCode assemble_standard_form(const StandardFormParts& parts, const FieldPtr& field,
                                  std::size_t r, std::size_t delta) {
  if (r < 1 || delta < 2) throw std::invalid_argument("standard form needs r >= 1, delta >= 2");
  const std::size_t ell = parts.q_blocks.size();
  if (ell == 0 || parts.v_blocks.size() != ell)
    throw std::invalid_argument("need one Q and one V block per group");
  const std::size_t local_rows = delta - 1;
  const std::size_t width = r + delta - 1;

  Matrix h(field, ell * local_rows + parts.u, ell * width);
  for (std::size_t i = 0; i < ell; ++i) {
    const Matrix& qb = parts.q_blocks[i];
    const Matrix& vb = parts.v_blocks[i];
    if (qb.rows() != local_rows || qb.cols() != r)
      throw std::invalid_argument("Q block " + std::to_string(i) + " has the wrong shape");
    if (vb.rows() != parts.u || vb.cols() != r)
      throw std::invalid_argument("V block " + std::to_string(i) + " has the wrong shape");
    for (auto e : qb.data())
      if (e == 0) throw std::invalid_argument("Q block " + std::to_string(i) + " has a zero entry");

    const std::size_t row0 = i * local_rows;
    const std::size_t col0 = i * width;
    for (std::size_t s = 0; s < local_rows; ++s) {
      h(row0 + s, col0 + s) = 1;
      for (std::size_t c = 0; c < r; ++c) h(row0 + s, col0 + local_rows + c) = qb(s, c);
    }
    for (std::size_t s = 0; s < parts.u; ++s)
      for (std::size_t c = 0; c < r; ++c)
        h(ell * local_rows + s, col0 + local_rows + c) = vb(s, c);
  }
  return LinearCode(std::move(h));
}

}  // namespace lrc
