#include "lrc/bounds.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "lrc/code.hpp"

namespace lrc {

namespace mp = boost::multiprecision;

std::int64_t generalized_singleton_d(std::int64_t n, std::int64_t k, std::int64_t r,
                                     std::int64_t delta) {
  if (k < 1 || r < 1 || delta < 2)
    throw std::domain_error("Singleton-type bound needs k >= 1, r >= 1, delta >= 2");
  const std::int64_t groups = (k + r - 1) / r;
  return n - k + 1 - (groups - 1) * (delta - 1);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("negative exponent");
  return mp::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("floor_div needs a positive divisor");
  BigInt q = a / b;  // truncates toward zero
  if (a < 0 && q * b != a) --q;
  return q;
}

BigInt floor_minus_sqrt(const BigInt& a, const BigInt& g, const BigInt& b) {
  if (g < 0) throw std::domain_error("negative radicand");
  auto fits = [&](const BigInt& t) {
    const BigInt x = a - t * b;
    return x >= 0 && x * x >= g;
  };
  BigInt t = floor_div(a - mp::sqrt(g), b);
  while (!fits(t)) --t;
  while (fits(t + 1)) ++t;
  return t;
}

BigInt floor_plus_scaled_sqrt(const BigInt& a, const BigInt& c, const BigInt& s, const BigInt& b) {
  if (s < 0) throw std::domain_error("negative radicand");
  if (c < 0) throw std::domain_error("negative sqrt coefficient");
  const BigInt cs = c * c * s;
  auto fits = [&](const BigInt& t) {
    const BigInt x = t * b - a;
    return x <= 0 || x * x <= cs;
  };
  BigInt t = floor_div(a + mp::sqrt(cs), b);
  while (!fits(t)) --t;
  while (fits(t + 1)) ++t;
  return t;
}

BigInt group_count_bound(std::int64_t q, std::int64_t u, std::int64_t r, std::int64_t delta) {
  if (q < 2 || u < 1 || r < 1 || delta < 1)
    throw std::domain_error("group-count bound needs q >= 2, u >= 1, r >= 1, delta >= 1");
  return (ipow(q, u) - 1) / ((q - 1) * binomial(r + delta - 1, delta));
}

namespace {

bool thm1_distance(std::int64_t delta, std::int64_t d) {
  return d == 2 * delta + 1 || d == 2 * delta + 2 || d == 3 * delta;
}

}  // namespace

BigInt thm1_length_bound(std::int64_t q, std::int64_t r, std::int64_t delta, std::int64_t d) {
  if (q < 2 || r < 1 || delta < 2) throw std::domain_error("needs q >= 2, r >= 1, delta >= 2");
  if (!thm1_distance(delta, d))
    throw std::domain_error("syndrome-count length bound needs d in {2delta+1, 2delta+2, 3delta}");
  const std::int64_t u = global_parity_rows(d, r, delta);
  if (u < 1) throw std::domain_error("infeasible parameters: u < 1");
  return (r + delta - 1) * group_count_bound(q, u, r, delta);
}

BigInt cai_length_bound(std::int64_t q, std::int64_t r, std::int64_t delta, std::int64_t d) {
  if (q < 2 || r < 1 || delta < 2) throw std::domain_error("needs q >= 2, r >= 1, delta >= 2");
  if (d < 2 * delta + 1 || d > 3 * delta)
    throw std::domain_error("earlier length bound needs 2delta+1 <= d <= 3delta");
  const std::int64_t u = global_parity_rows(d, r, delta);
  return (r + delta - 1) * (ipow(q, u) / (r * (q - 1)));
}

BigInt corollary_r2_bound(std::int64_t q, std::int64_t delta, std::int64_t d) {
  if (q < 2 || delta < 2) throw std::domain_error("needs q >= 2, delta >= 2");
  if (d == 2 * delta + 1) return BigInt(q + 1);
  if (d == 2 * delta + 2) return (delta + 1) * ((q * q + q + 1) / (delta + 1));
  throw std::domain_error("r = 2 length bound needs d in {2delta+1, 2delta+2}");
}

BigInt thm5_bound(std::int64_t q, std::int64_t delta) {
  if (delta < 2) throw std::domain_error("needs delta >= 2");
  if (q < delta + 1) throw std::domain_error("non-sunflower bound needs q >= delta+1");
  const BigInt sunflower = BigInt(delta + 1) * (q + 1);
  const BigInt spread = BigInt(delta + 1) * ((q * q + q + 1) / (delta + 2));
  return std::max(sunflower, spread);
}

JohnsonLengthBounds thm6_bounds(std::int64_t q, std::int64_t delta) {
  if (delta < 2) throw std::domain_error("needs delta >= 2");
  if (q < delta + 2) throw std::domain_error("Johnson length bounds need q >= delta+2");
  const BigInt Q = q, D = delta, D1 = delta + 1;

  const BigInt gamma = (4 * D + 5) * mp::pow(Q, 4) - (8 * D * D + 12 * D + 2) * mp::pow(Q, 3) +
                       (4 * D * D * D + 6 * D * D - 1) * Q * Q - 2 * D1 * D1 * Q +
                       mp::pow(D1, 4);
  if (gamma < 0) throw std::domain_error("negative radicand in pair-count bound");
  const BigInt a16 = (2 * D + 3) * Q * Q + Q + D1 * D1;
  const BigInt b16 = 2 * D1 * D1;

  const BigInt s17 = 4 * D1 * Q - (3 * D * D + 4 * D);
  if (s17 < 0) throw std::domain_error("negative radicand in weight bound");
  const BigInt a17 = D * (Q + 2) + 2;
  const BigInt b17 = 2 * D1;

  return {D1 * floor_minus_sqrt(a16, gamma, b16), D1 * floor_plus_scaled_sqrt(a17, Q, s17, b17)};
}

JohnsonCw johnson_cw_bound(std::int64_t n, std::int64_t delta, std::int64_t w) {
  if (!(n >= w && w >= delta && delta >= 1))
    throw std::domain_error("Johnson bound needs n >= w >= delta >= 1");
  JohnsonCw out;
  const std::int64_t t = w - delta + 1;
  out.bound6 = binomial(n, t) / binomial(w, t);
  const BigInt den = BigInt(w) * w - BigInt(w) * n + BigInt(delta) * n;
  if (den > 0) out.bound7 = (BigInt(delta) * n) / den;
  return out;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

BoundReport bounds_report(std::int64_t q, std::int64_t r, std::int64_t delta, std::int64_t d) {
  if (q < 2 || r < 1 || delta < 2) throw std::domain_error("needs q >= 2, r >= 1, delta >= 2");
  BoundReport rep;
  rep.q = q;
  rep.r = r;
  rep.delta = delta;
  rep.d = d;
  try {
    rep.u = global_parity_rows(d, r, delta);
  } catch (const std::domain_error&) {
  }

  auto add = [&](std::string name, bool applies, auto&& eval, std::string basis) {
    BoundEntry e{std::move(name), std::nullopt, std::move(basis)};
    if (applies) {
      try {
        e.value = eval();
      } catch (const std::domain_error&) {
      }
    }
    rep.entries.push_back(std::move(e));
  };

  const bool r2 = r == 2;
  const bool d_odd = d == 2 * delta + 1;
  const bool d_even = d == 2 * delta + 2;
  add("thm1", thm1_distance(delta, d), [&] { return thm1_length_bound(q, r, delta, d); },
      "distinct syndromes of delta-column local dependencies");
  add("cai", d >= 2 * delta + 1 && d <= 3 * delta,
      [&] { return cai_length_bound(q, r, delta, d); }, "earlier q^u/(r(q-1)) group bound");
  add("corollary", r2 && (d_odd || d_even), [&] { return corollary_r2_bound(q, delta, d); },
      d_odd ? "r=2 closed form, n <= q+1" : "r=2 closed form over PG(2,q) points");
  add("corollary_grouped", r2 && d_odd,
      [&] { return BigInt(delta + 1) * ((q + 1) / (delta + 1)); },
      "q+1 rounded down to a multiple of delta+1");
  add("thm5", r2 && d_even && q >= delta + 1, [&] { return thm5_bound(q, delta); },
      "sunflower vs non-sunflower incidence count");
  add("thm6_pair", r2 && d_even && q >= delta + 2, [&] { return thm6_bounds(q, delta).pair; },
      "Johnson pair-count bound on the private-point code");
  add("thm6_weight", r2 && d_even && q >= delta + 2,
      [&] { return thm6_bounds(q, delta).weight; },
      "Johnson weight bound on the private-point code");

  bool any = false;
  for (const auto& e : rep.entries) {
    if (!e.value) continue;
    if (!any || *e.value < rep.best) {
      rep.best = *e.value;
      rep.best_by.clear();
    }
    if (*e.value == rep.best) rep.best_by.push_back(e.name);
    any = true;
  }
  if (!any) throw std::domain_error("no length bound applies to these parameters");
  return rep;
}

namespace {

const char* const kColumns[] = {"thm1", "cai", "corollary", "corollary_grouped",
                                "thm5", "thm6_pair", "thm6_weight"};

std::string cell(const BoundReport& rep, const char* name) {
  const auto* e = rep.find(name);
  return e && e->value ? e->value->str() : "-";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

}  // namespace

std::string tsv_header() {
  std::string h = "q\tr\tdelta\td\tu";
  for (auto c : kColumns) h += std::string("\t") + c;
  return h + "\tbest\tbest_by";
}

std::string tsv_row(const BoundReport& rep) {
  std::ostringstream os;
  os << rep.q << '\t' << rep.r << '\t' << rep.delta << '\t' << rep.d << '\t';
  os << (rep.u ? std::to_string(*rep.u) : "-");
  for (auto c : kColumns) os << '\t' << cell(rep, c);
  os << '\t' << rep.best << '\t' << join(rep.best_by);
  return os.str();
}

std::string table(const BoundReport& rep) {
  std::ostringstream os;
  os << "q=" << rep.q << " r=" << rep.r << " delta=" << rep.delta << " d=" << rep.d
     << " u=" << (rep.u ? std::to_string(*rep.u) : "-") << "\n";
  for (const auto& e : rep.entries) {
    os << "  " << std::left << std::setw(18) << e.name << std::right << std::setw(10)
       << (e.value ? e.value->str() : "n/a") << "  " << e.basis << "\n";
  }
  os << "  " << std::left << std::setw(18) << "best" << std::right << std::setw(10) << rep.best
     << "  via " << join(rep.best_by) << "\n";
  return os.str();
}

}  // namespace lrc
