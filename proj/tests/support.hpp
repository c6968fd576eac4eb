// Shared helpers for the unit tests: small independent oracles and random
// inputs.

#ifndef LRC_TESTS_SUPPORT_HPP
#define LRC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/matrix.hpp"

namespace lrc::test {

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols,
                            std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->q() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = pick(rng);
  return m;
}

/// Minimum weight of a nonzero x with H x = 0, by walking all of GF(q)^n.
/// Returns nullopt for the zero code.
inline std::optional<std::size_t> brute_force_distance(const Matrix& h) {
  const Field& f = h.field();
  const std::size_t n = h.cols();
  std::vector<Elem> x(n, 0);
  std::optional<std::size_t> best;
  while (true) {
    std::size_t i = 0;
    while (i < n && x[i] == f.q() - 1) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    bool zero = true;
    for (std::size_t r = 0; r < h.rows() && zero; ++r) {
      Elem s = 0;
      for (std::size_t c = 0; c < n; ++c) s = f.add(s, f.mul(h(r, c), x[c]));
      zero = s == 0;
    }
    if (zero) {
      const std::size_t w = weight(x);
      if (!best || w < *best) best = w;
    }
  }
  return best;
}

}  // namespace lrc::test

#endif  // LRC_TESTS_SUPPORT_HPP
