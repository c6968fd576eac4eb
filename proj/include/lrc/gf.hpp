// Finite fields GF(p^m) with table-driven arithmetic.
//
// Elements are stored as their base-p integer encoding: the residue
// polynomial c_0 + c_1 x + ... + c_{m-1} x^{m-1} maps to sum c_i p^i.
// Multiplication goes through log/antilog tables built from a primitive
// element; addition in odd characteristic uses a Zech-style "one plus"
// table so all tables stay O(q).

#ifndef LRC_GF_HPP
#define LRC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds GF(p^m). With no modulus the lexicographically smallest monic
  /// irreducible of degree m is used (lower coefficients read as a base-p
  /// integer, x^{m-1} most significant). `modulus` is given low degree
  /// first and must be monic of degree m.
  static FieldPtr build(std::uint32_t p, std::uint32_t m,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Convenience for a prime-power order q.
  static FieldPtr of_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Smallest-rep primitive element used for the log tables.
  Elem generator() const { return generator_; }

  bool same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
  }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    // a + b = a (1 + b/a)
    std::uint32_t t = log_[b] + (q_ - 1) - log_[a];
    if (t >= q_ - 1) t -= q_ - 1;
    return mul(a, one_plus_[t]);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF inverse of zero");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t order(Elem a) const;

  std::string describe() const;

 private:
  Field() = default;
  void build_tables();

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> antilog_;  // length 2(q-1) so log sums need no reduction
  std::vector<Elem> one_plus_;  // one_plus_[t] = 1 + g^t
  std::vector<Elem> neg_;
};

/// Polynomial arithmetic over GF(p) used to build and validate moduli.
namespace poly {
std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a,
                               const std::vector<std::uint32_t>& b, std::uint32_t p);
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);
}  // namespace poly

bool is_prime(std::uint64_t n);

/// Splits q = p^m; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// A field element bound to its field, for call sites that want checked
/// mixed-field arithmetic. Kernels work on raw `Elem` reps instead.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem rep);

  const FieldPtr& field() const { return field_; }
  Elem rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const {
    return rep_ == o.rep_ && field_->same_as(*o.field_);
  }

 private:
  const Field& checked(const FieldElement& o) const;

  FieldPtr field_;
  Elem rep_;
};

}  // namespace lrc

#endif  // LRC_GF_HPP
