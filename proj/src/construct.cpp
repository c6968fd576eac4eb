#include "lrc/construct.hpp"

#include <chrono>
#include <stdexcept>

#include "lrc/bounds.hpp"

namespace lrc {

namespace {

// (a, b) with w = a*u + b*v, from a nonzero 2x2 minor of (u | v).
std::pair<Elem, Elem> coordinates_in(const Field& f, const Triple& u, const Triple& v,
                                     const Triple& w) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Elem det = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
      if (det == 0) continue;
      const Elem inv = f.inv(det);
      const Elem a = f.mul(inv, f.sub(f.mul(w[i], v[j]), f.mul(w[j], v[i])));
      const Elem b = f.mul(inv, f.sub(f.mul(u[i], w[j]), f.mul(u[j], w[i])));
      for (std::size_t s = 0; s < 3; ++s)
        if (f.add(f.mul(a, u[s]), f.mul(b, v[s])) != w[s])
          throw std::logic_error("free point is not in the span of u and v");
      return {a, b};
    }
  throw std::logic_error("u and v are dependent");
}

}  // namespace

GroupGeometry choose_free_subspaces(const LineFamily& family, std::size_t i, std::size_t delta) {
  if (delta < 2) throw std::invalid_argument("delta must be at least 2");
  const Field& f = family.field();
  const auto priv = private_points(family, i);
  if (priv.size() < delta + 1)
    throw std::invalid_argument("line " + std::to_string(i) + " has " +
                                std::to_string(priv.size()) + " private points, needs " +
                                std::to_string(delta + 1));
  GroupGeometry g;
  g.line = family.lines()[i];
  g.u_vec = priv[0].coords;
  g.v_vec = priv[1].coords;
  for (std::size_t m = 2; m <= delta; ++m) {
    const auto ab = coordinates_in(f, g.u_vec, g.v_vec, priv[m].coords);
    if (ab.first == 0 || ab.second == 0)
      throw std::logic_error("free point coincides with span of u or v");
    g.coeffs.push_back(ab);
  }
  return g;
}

std::pair<std::vector<Elem>, std::vector<Elem>> solve_mds_columns(
    const Field& f, const std::vector<std::pair<Elem, Elem>>& coeffs) {
  std::vector<Elem> p, q;
  for (const auto& [a, b] : coeffs) {
    if (a == 0 || b == 0) throw std::invalid_argument("coefficients must be nonzero");
    p.push_back(b);
    q.push_back(f.neg(a));
  }
  return {p, q};
}

LinearCode lines_to_parity_check(const LineFamily& family, std::size_t delta) {
  if (delta < 2) throw std::invalid_argument("delta must be at least 2");
  const std::size_t ell = family.size();
  if (ell < 2) throw std::invalid_argument("construction needs at least two lines");
  if (!satisfies_intersection_condition(family, delta))
    throw std::invalid_argument("line family violates the intersection condition");
  const FieldPtr& field = family.field_ptr();
  const Field& f = *field;

  StandardFormParts parts;
  parts.u = 3;
  for (std::size_t i = 0; i < ell; ++i) {
    const GroupGeometry g = choose_free_subspaces(family, i, delta);
    const auto [p, q] = solve_mds_columns(f, g.coeffs);
    Matrix qb(field, delta - 1, 2);
    for (std::size_t m = 0; m + 1 < delta; ++m) {
      qb(m, 0) = p[m];
      qb(m, 1) = q[m];
    }
    Matrix vb(field, 3, 2);
    for (std::size_t s = 0; s < 3; ++s) {
      vb(s, 0) = g.u_vec[s];
      vb(s, 1) = g.v_vec[s];
    }
    parts.q_blocks.push_back(std::move(qb));
    parts.v_blocks.push_back(std::move(vb));
  }
  LinearCode code = assemble_standard_form(parts, field, 2, delta);
  if (code.k() != 2 * ell - 3)
    throw std::logic_error("constructed code has dimension " + std::to_string(code.k()) +
                           ", expected " + std::to_string(2 * ell - 3));
  return code;
}

LinearCode sunflower_code(const FieldPtr& field, std::size_t delta) {
  if (field->q() < delta + 1) throw std::invalid_argument("sunflower code needs q >= delta + 1");
  return lines_to_parity_check(sunflower_family(field, ProjPoint{{1, 0, 0}}), delta);
}

Certificate verify_optimal_lrc(const LinearCode& code, std::size_t r, std::size_t delta,
                               std::uint64_t budget, kernels::Exec exec) {
  using clock = std::chrono::steady_clock;
  Certificate c;
  c.n = code.n();
  c.k = code.k();
  c.r = r;
  c.delta = delta;
  auto timed = [&](const char* stage, auto&& body) {
    const auto t0 = clock::now();
    body();
    c.stage_times.push_back(
        {stage, std::chrono::duration<double, std::milli>(clock::now() - t0).count()});
  };
  auto fail = [&](const char* stage, std::string reason) {
    c.failed_stage = stage;
    c.reason = std::move(reason);
    return c;
  };

  if (r < 1 || delta < 2) throw std::invalid_argument("locality needs r >= 1 and delta >= 2");
  if (c.n % (r + delta - 1) != 0)
    return fail("locality", "r + delta - 1 = " + std::to_string(r + delta - 1) +
                                " does not divide n = " + std::to_string(c.n));
  LocalityCheck loc;
  timed("locality", [&] { loc = check_disjoint_rdelta_locality(code, r, delta); });
  if (!loc.ok()) return fail("locality", loc.reason);
  c.ell = loc.profile->ell;
  c.u = static_cast<std::int64_t>(c.n) - static_cast<std::int64_t>(c.k) -
        static_cast<std::int64_t>(c.ell * (delta - 1));

  if (c.k == 0) return fail("distance", "code has dimension 0");
  DistanceResult dist;
  timed("distance", [&] { dist = min_distance_exact(code, budget, exec); });
  c.d = dist.d;
  c.strategy = dist.strategy;

  c.singleton_d = generalized_singleton_d(c.n, c.k, r, delta);
  if (!is_singleton_optimal(c.n, c.k, *c.d, r, delta))
    return fail("singleton", "d = " + std::to_string(*c.d) + " but the Singleton-type bound is " +
                                 std::to_string(*c.singleton_d));

  try {
    c.u_expected = global_parity_rows(*c.d, r, delta);
  } catch (const std::domain_error& e) {
    return fail("u", e.what());
  }
  if (*c.u != *c.u_expected)
    return fail("u", "global row count " + std::to_string(*c.u) + " differs from " +
                         std::to_string(*c.u_expected));
  c.optimal = true;
  return c;
}

}  // namespace lrc
