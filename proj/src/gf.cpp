#include "lrc/gf.hpp"

#include <sstream>

namespace lrc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1 || p > UINT32_MAX) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

namespace poly {
namespace {

void trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a,
                               const std::vector<std::uint32_t>& b, std::uint32_t p) {
  std::vector<std::uint32_t> d = b;
  trim(d);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  const std::size_t db = d.size() - 1;
  const std::uint32_t lead_inv = inv_mod(d.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = c * d[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  std::vector<std::uint32_t> g = f;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    std::vector<std::uint32_t> h(k + 1, 0);
    h[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        h[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (mod(g, h, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  std::vector<std::uint32_t> f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace poly

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Reference multiplication on digit vectors; only used while building tables.
struct SlowArith {
  std::uint32_t p, m;
  const std::vector<std::uint32_t>& modulus;

  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  Elem pack(const std::vector<std::uint32_t>& d) const {
    Elem r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
    return r;
  }
  Elem mul(Elem a, Elem b) const {
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    auto rem = poly::mod(std::move(prod), modulus, p);
    rem.resize(m, 0);
    return pack(rem);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace

FieldPtr Field::build(std::uint32_t p, std::uint32_t m,
                      std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw FieldError("fields larger than 2^16 are not supported");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<std::uint32_t>(q);
  if (modulus) {
    auto& mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(m));
    for (auto c : mod)
      if (c >= p) throw FieldError("modulus coefficient out of range");
    if (!poly::is_irreducible(mod, p)) throw FieldError("modulus is reducible");
    f->modulus_ = mod;
  } else {
    f->modulus_ = poly::smallest_irreducible(p, m);
  }
  f->build_tables();
  return f;
}

FieldPtr Field::of_order(std::uint32_t q) {
  auto pm = prime_power(q);
  if (!pm) throw FieldError(std::to_string(q) + " is not a prime power");
  return build(pm->first, pm->second);
}

void Field::build_tables() {
  const SlowArith slow{p_, m_, modulus_};
  const std::uint32_t order = q_ - 1;

  generator_ = 1;
  if (q_ > 2) {
    const auto factors = prime_factors(order);
    for (Elem g = 2; g < q_; ++g) {
      bool primitive = slow.pow(g, order) == 1;
      for (auto r : factors) {
        if (!primitive) break;
        primitive = slow.pow(g, order / r) != 1;
      }
      if (primitive) {
        generator_ = g;
        break;
      }
    }
  }

  log_.assign(q_, 0);
  antilog_.assign(2 * static_cast<std::size_t>(order), 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    antilog_[i] = x;
    antilog_[i + order] = x;
    log_[x] = i;
    x = slow.mul(x, generator_);
  }
  if (x != 1) throw std::logic_error("generator search failed");

  neg_.assign(q_, 0);
  for (Elem a = 0; a < q_; ++a) {
    auto d = slow.digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[a] = slow.pack(d);
  }

  one_plus_.assign(order, 0);
  for (std::uint32_t t = 0; t < order; ++t) {
    const Elem a = antilog_[t];
    const std::uint32_t c0 = a % p_;
    one_plus_[t] = a - c0 + (c0 + 1) % p_;
  }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return antilog_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

std::uint32_t Field::order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t t = 1;
  for (Elem x = a; x != 1; x = mul(x, a)) ++t;
  return t;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (m_ > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Elem rep) : field_(std::move(field)), rep_(rep) {
  if (!field_) throw std::invalid_argument("null field");
  if (rep_ >= field_->q()) throw std::out_of_range("element rep out of range for field");
}

const Field& FieldElement::checked(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) throw FieldError("mismatched fields");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, checked(o).add(rep_, o.rep_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, checked(o).sub(rep_, o.rep_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, checked(o).mul(rep_, o.rep_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, checked(o).div(rep_, o.rep_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(rep_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(rep_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(rep_, e)}; }

}  // namespace lrc
