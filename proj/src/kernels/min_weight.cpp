#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lrc/kernels.hpp"

#ifdef LRC_HAVE_OPENMP
#include <omp.h>
#endif

namespace lrc::kernels {

int max_threads() {
#ifdef LRC_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("codeword count overflows 64 bits");
    r *= base;
  }
  return r;
}

std::vector<Elem> codeword_at(const Matrix& gen, std::uint64_t index) {
  const Field& f = gen.field();
  std::vector<Elem> cw(gen.cols(), 0);
  for (std::size_t i = 0; i < gen.rows(); ++i) {
    const Elem c = static_cast<Elem>(index % f.q());
    index /= f.q();
    if (c == 0) continue;
    auto row = gen.row(i);
    for (std::size_t j = 0; j < cw.size(); ++j) cw[j] = f.add(cw[j], f.mul(c, row[j]));
  }
  return cw;
}

struct Best {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::uint64_t index = 0;

  void offer(std::size_t w, std::uint64_t idx) {
    if (w < weight || (w == weight && idx < index)) {
      weight = w;
      index = idx;
    }
  }
};

}  // namespace

MinWeight min_weight_reference(const Matrix& gen) {
  if (gen.rows() == 0) throw std::invalid_argument("generator matrix has no rows");
  const std::uint64_t total = checked_power(gen.field().q(), gen.rows());
  Best best;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const auto cw = codeword_at(gen, idx);
    best.offer(weight(cw), idx);
  }
  MinWeight out;
  out.weight = best.weight;
  out.index = best.index;
  out.codeword = codeword_at(gen, best.index);
  out.visited = total - 1;
  return out;
}

MinWeight min_weight_blocked(const Matrix& gen, Exec exec) {
  if (gen.rows() == 0) throw std::invalid_argument("generator matrix has no rows");
  const Field& f = gen.field();
  const std::uint32_t q = f.q();
  const std::size_t k = gen.rows();
  const std::size_t n = gen.cols();
  const std::uint64_t total = checked_power(q, k);

  // Inner digits are walked incrementally; outer digits index the blocks.
  std::size_t inner = 0;
  std::uint64_t block = 1;
  while (inner < k && block < 4096) {
    block *= q;
    ++inner;
  }
  const std::uint64_t blocks = total / block;

  // step[(i * q + j) * n ..] = (rep j+1 - rep j) * row i, wrapping at q-1.
  std::vector<Elem> step(inner * q * n);
  for (std::size_t i = 0; i < inner; ++i) {
    auto row = gen.row(i);
    for (std::uint32_t j = 0; j < q; ++j) {
      const Elem diff = f.sub((j + 1) % q, j);
      Elem* dst = step.data() + (i * q + j) * n;
      for (std::size_t c = 0; c < n; ++c) dst[c] = f.mul(diff, row[c]);
    }
  }

  Best global;
  [[maybe_unused]] const bool parallel = exec == Exec::parallel;
  const auto nblocks = static_cast<std::int64_t>(blocks);

#pragma omp parallel if (parallel)
  {
    Best local;
    std::vector<Elem> cw(n);
    std::vector<std::uint32_t> digit(inner);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nblocks; ++b) {
      const std::uint64_t base_index = static_cast<std::uint64_t>(b) * block;
      // Outer contribution; the inner digits all start at zero.
      std::fill(cw.begin(), cw.end(), 0);
      std::uint64_t rest = static_cast<std::uint64_t>(b);
      for (std::size_t i = inner; i < k; ++i) {
        const Elem c = static_cast<Elem>(rest % q);
        rest /= q;
        if (c == 0) continue;
        auto row = gen.row(i);
        for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(c, row[j]));
      }
      std::fill(digit.begin(), digit.end(), 0);
      for (std::uint64_t t = 0; t < block; ++t) {
        const std::uint64_t idx = base_index + t;
        if (idx != 0) local.offer(weight(cw), idx);
        for (std::size_t i = 0; i < inner; ++i) {
          const Elem* d = step.data() + (i * q + digit[i]) * n;
          for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], d[j]);
          digit[i] = digit[i] + 1 == q ? 0 : digit[i] + 1;
          if (digit[i] != 0) break;
        }
      }
    }
#pragma omp critical(lrc_min_weight)
    global.offer(local.weight, local.index);
  }

  MinWeight out;
  out.weight = global.weight;
  out.index = global.index;
  out.codeword = codeword_at(gen, global.index);
  out.visited = total - 1;
  return out;
}

}  // namespace lrc::kernels
