#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reesalg/errors.hpp"
#include "reesalg/exponent.hpp"
#include "reesalg/monomial_ideal.hpp"
#include "reesalg/polyhedra.hpp"

namespace reesalg {

/// The map (z_1..z_d, b) -> (z_1..z_d, sum z - b) on Z^{d+1}. It sends the
/// degree of x^z t^b into Z^{d+1}_{>=0} whenever x^z t^b lies in an extended
/// Rees algebra of a monomial ideal, and it is its own inverse.
inline ExponentVector embed_phi(const ExponentVector& v) {
  if (v.size() < 2) throw DimensionMismatch("embed_phi needs a vector of length d+1 >= 2");
  ExponentVector out = v;
  const std::size_t d = v.size() - 1;
  Exponent s = 0;
  for (std::size_t j = 0; j < d; ++j) s = checked_add(s, v[j]);
  out[d] = checked_sub(s, v[d]);
  return out;
}

/// Degree (z, b) of the monomial x^z t^b as a vector of length d+1.
inline ExponentVector rees_degree(const ExponentVector& z, Exponent b) {
  ExponentVector out(z.size() + 1);
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = z[j];
  out[z.size()] = b;
  return out;
}

/// The affine semigroup phi(C) of the normalized extended Rees algebra, as the
/// integer points of { v in Z^{d+1} : M v >= 0 }.
///
/// Rows of M: one lifted row (a_1 - h, ..., a_d - h, h) per bounded facet
/// <a, v> >= h of NP(I) (in facet order), then e_1..e_d.
struct ReesCone {
  std::size_t dim = 0;  // d; vectors in the cone have length d+1
  IntMatrix rows;
  std::size_t num_lifted = 0;  // leading rows that come from bounded facets
  std::vector<ExponentVector> rays;
  FacetSystem source;

  ExponentVector evaluate(const ExponentVector& v) const {
    if (v.size() != dim + 1) throw DimensionMismatch("cone point " + v.to_string() + " needs length " +
                                                     std::to_string(dim + 1));
    ExponentVector out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].dot(v);
    return out;
  }

  bool contains(const ExponentVector& v) const {
    const auto mv = evaluate(v);
    return std::all_of(mv.begin(), mv.end(), [](Exponent x) { return x >= 0; });
  }

  /// Strict positivity on every row. For a lattice point of a full-dimensional
  /// cone with integral facet normals this is exactly relint membership.
  bool relint_contains(const ExponentVector& v) const {
    const auto mv = evaluate(v);
    return std::all_of(mv.begin(), mv.end(), [](Exponent x) { return x >= 1; });
  }
};

inline ExponentVector all_ones_with_last(std::size_t d, Exponent last) {
  ExponentVector v(d + 1, 1);
  v[d] = last;
  return v;
}

inline ReesCone lift_halfspaces(const FacetSystem& F) {
  if (!F.m_primary_source) throw Inapplicable("the Rees cone needs an m-primary ideal");
  const std::size_t d = F.dim;
  ReesCone RC;
  RC.dim = d;
  RC.source = F;
  for (const auto& h : F.bounded) {
    ExponentVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = checked_sub(h.normal[j], h.offset);
    row[d] = h.offset;
    RC.rows.push_back(row);
  }
  RC.num_lifted = RC.rows.size();
  for (std::size_t j = 0; j < d; ++j) RC.rows.push_back(ExponentVector::unit(d + 1, j));

  std::vector<std::vector<BigInt>> big;
  for (const auto& r : RC.rows) big.push_back(detail::to_big(r));
  if (detail::rank_and_basis(big, d + 1).first != d + 1)
    throw InvariantViolation("lifted cone is not full rank");
  RC.rays = extreme_rays(RC.rows, d + 1);
  for (const auto& r : RC.rays)
    if (!r.is_nonnegative()) throw InvariantViolation("extreme ray " + r.to_string() + " leaves Z^{d+1}_{>=0}");
  return RC;
}

inline ReesCone rees_cone(const MonomialIdeal& I) { return lift_halfspaces(newton_polyhedron(I)); }

inline bool cone_member(const ReesCone& RC, const ExponentVector& v) { return RC.contains(v); }
inline bool relint_member(const ReesCone& RC, const ExponentVector& v) { return RC.relint_contains(v); }

/// Least q with (1,...,1,q) in relint; always in [1, d+1].
inline Exponent compute_q(const ReesCone& RC) {
  const auto d = static_cast<Exponent>(RC.dim);
  for (Exponent q = 1; q <= d + 1; ++q)
    if (RC.relint_contains(all_ones_with_last(RC.dim, q))) return q;
  throw InvariantViolation("no q in [1, d+1] with (1,...,1,q) in the relative interior");
}

/// How the canonical-generator search was bounded and checked.
struct SearchCertificate {
  ExponentVector search_lo, search_hi;  // candidate box
  ExponentVector sweep_hi;             // verification box (search box + 1)
  std::size_t candidates = 0;          // relint points in the search box
  std::size_t swept = 0;               // relint points checked by the sweep
};

struct CanonicalData {
  Exponent q = 0;
  std::vector<ExponentVector> generators;  // sorted by t-degree, then lex
  bool gorenstein = false;
  Exponent a_normalization = 0;
  SearchCertificate search;
};

namespace detail {

/// t-degree of phi^{-1}(v): sum_{j<=d} v_j - v_{d+1}.
inline Exponent t_degree(const ExponentVector& v) {
  const std::size_t d = v.size() - 1;
  Exponent s = 0;
  for (std::size_t j = 0; j < d; ++j) s += v[j];
  return s - v[d];
}

/// Search box for minimal relint generators. A minimal generator v lies in
/// the parallelotope sum_{i in S} [0,1] r_i of some linearly independent set
/// S of d+1 extreme rays (otherwise v - r_i stays in the relative interior),
/// so coordinate k is at most the sum of the d+1 largest r_i[k].
inline std::pair<ExponentVector, ExponentVector> relint_search_box(const ReesCone& RC) {
  const std::size_t n = RC.dim + 1;
  ExponentVector lo(n, 0), hi(n, 0);
  for (std::size_t k = 0; k < RC.dim; ++k) lo[k] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Exponent> col;
    for (const auto& r : RC.rays) col.push_back(r[k]);
    std::sort(col.rbegin(), col.rend());
    Exponent s = 0;
    for (std::size_t i = 0; i < std::min(n, col.size()); ++i) s = checked_add(s, col[i]);
    hi[k] = std::max(s, lo[k]);
  }
  return {lo, hi};
}

}  // namespace detail

/// Minimal generators of the relint semigroup ideal (the canonical ideal of
/// the normalized extended Rees algebra), with a verification sweep.
inline CanonicalData canonical_generators(const ReesCone& RC, std::size_t budget = kDefaultPointBudget) {
  CanonicalData CD;
  CD.q = compute_q(RC);
  auto [lo, hi] = detail::relint_search_box(RC);
  CD.search.search_lo = lo;
  CD.search.search_hi = hi;

  std::vector<ExponentVector> candidates;
  detail::for_each_point(lo, hi, budget, [&](const ExponentVector& v) {
    if (!RC.relint_contains(v)) return;
    ++CD.search.candidates;
    for (const auto& r : RC.rays)
      if (RC.relint_contains(v - r)) return;
    candidates.push_back(v);
  });
  // If v = u + c with u relint and c a nonzero cone point, then u has smaller
  // coordinate sum (the cone sits in the orthant), so it is seen first.
  std::sort(candidates.begin(), candidates.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto sa = a.total(), sb = b.total();
    return sa != sb ? sa < sb : a < b;
  });
  for (const auto& v : candidates) {
    const bool reducible = std::any_of(CD.generators.begin(), CD.generators.end(),
                                       [&](const ExponentVector& g) { return RC.contains(v - g); });
    if (!reducible) CD.generators.push_back(v);
  }

  ExponentVector sweep_hi = hi;
  for (auto& c : sweep_hi) c = checked_add(c, 1);
  CD.search.sweep_hi = sweep_hi;
  detail::for_each_point(lo, sweep_hi, budget, [&](const ExponentVector& v) {
    if (!RC.relint_contains(v)) return;
    ++CD.search.swept;
    const bool covered = std::any_of(CD.generators.begin(), CD.generators.end(),
                                     [&](const ExponentVector& g) { return RC.contains(v - g); });
    if (!covered) throw InvariantViolation("incomplete generator search: relint point " + v.to_string() +
                                           " is not a generator plus a cone point");
  });

  std::sort(CD.generators.begin(), CD.generators.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto ta = detail::t_degree(a), tb = detail::t_degree(b);
    return ta != tb ? ta < tb : a < b;
  });

  const auto special = all_ones_with_last(RC.dim, CD.q);
  if (std::find(CD.generators.begin(), CD.generators.end(), special) == CD.generators.end())
    throw InvariantViolation("(1,...,1,q) = " + special.to_string() + " is not a minimal canonical generator");
  CD.gorenstein = CD.generators.size() == 1;

  CD.a_normalization = -detail::t_degree(CD.generators.front());
  const auto d = static_cast<Exponent>(RC.dim);
  if (CD.a_normalization < CD.q - d)
    throw InvariantViolation("a-invariant of the normalization below q - d");
  if (CD.gorenstein && CD.a_normalization != CD.q - d)
    throw InvariantViolation("Gorenstein normalization with a != q - d");
  return CD;
}

/// Gorenstein verdict for the normalized extended Rees algebra with both routes.
struct GorensteinVerdict {
  bool gorenstein = false;
  std::vector<Exponent> w;         // w_i = <row_i, (1,...,1,q)>
  bool shifted_cone_route = false; // relint ⊆ ∩ N_i^+
  bool principal_route = false;    // canonical ideal generated by (1,...,1,q) alone
  CanonicalData canonical;
};

/// relint(phi(C)) ⊆ ∩_i { v : <row_i, v> >= w_i }. Every relint point is a
/// generator plus a cone point and generators lie in the certified search box,
/// so it is enough to scan the relint points of that box.
inline bool relint_in_shifted_cone(const ReesCone& RC, const std::vector<Exponent>& w, const SearchCertificate& cert,
                                   std::size_t budget = kDefaultPointBudget) {
  bool ok = true;
  detail::for_each_point(cert.search_lo, cert.search_hi, budget, [&](const ExponentVector& v) {
    if (!ok) return;
    const auto mv = RC.evaluate(v);
    bool interior = true;
    for (Exponent x : mv) interior = interior && x >= 1;
    if (!interior) return;
    for (std::size_t i = 0; i < mv.size(); ++i)
      if (mv[i] < w[i]) ok = false;
  });
  return ok;
}

inline GorensteinVerdict is_gorenstein_normalization(const ReesCone& RC, std::size_t budget = kDefaultPointBudget) {
  GorensteinVerdict out;
  out.canonical = canonical_generators(RC, budget);
  out.w = RC.evaluate(all_ones_with_last(RC.dim, out.canonical.q)).coords();
  out.shifted_cone_route = relint_in_shifted_cone(RC, out.w, out.canonical.search, budget);
  out.principal_route = out.canonical.gorenstein;
  if (out.shifted_cone_route != out.principal_route)
    throw InvariantViolation("Gorenstein routes disagree: shifted-cone containment " +
                             std::string(out.shifted_cone_route ? "holds" : "fails") + ", principal canonical ideal " +
                             std::string(out.principal_route ? "holds" : "fails"));
  out.gorenstein = out.principal_route;
  return out;
}

inline GorensteinVerdict is_gorenstein_normalization(const MonomialIdeal& I, std::size_t budget = kDefaultPointBudget) {
  if (!is_m_primary(I)) throw Inapplicable("Gorenstein test of the normalization needs an m-primary ideal");
  return is_gorenstein_normalization(rees_cone(I), budget);
}

struct PurePowerTest {
  Exponent L = 1;
  Exponent j = 0;
  Exponent p = 1;
  bool gorenstein = true;
};

/// For I = (x_1^{a_1}, ..., x_d^{a_d}): write sum L/a_i = jL + p with
/// 1 <= p <= L, L = lcm(a). The normalization is Gorenstein iff p = 1.
inline PurePowerTest pure_power_fast_test(const std::vector<Exponent>& a) {
  if (a.empty()) throw std::invalid_argument("pure_power_fast_test: empty exponent list");
  PurePowerTest t;
  for (Exponent x : a) {
    if (x < 1) throw std::invalid_argument("pure_power_fast_test: exponents must be positive");
    t.L = checked_mul(t.L / std::gcd(t.L, x), x);
  }
  Exponent s = 0;
  for (Exponent x : a) s = checked_add(s, t.L / x);
  t.p = (s - 1) % t.L + 1;
  t.j = (s - t.p) / t.L;
  t.gorenstein = t.p == 1;
  return t;
}

/// a(normalization) = -(least t-degree among canonical generators).
inline Exponent a_invariant_normalization(const CanonicalData& CD, std::size_t d) {
  if (CD.generators.empty()) throw std::invalid_argument("canonical data without generators");
  Exponent lowest = std::numeric_limits<Exponent>::max();
  for (const auto& g : CD.generators) {
    if (g.size() != d + 1) throw DimensionMismatch("canonical generator length");
    lowest = std::min(lowest, detail::t_degree(g));
  }
  const Exponent a = -lowest;
  const auto dd = static_cast<Exponent>(d);
  if (a < CD.q - dd) throw InvariantViolation("a(normalization) = " + std::to_string(a) + " < q - d");
  if (CD.gorenstein && a != CD.q - dd) throw InvariantViolation("Gorenstein normalization with a != q - d");
  return a;
}

/// Reduction number of the integral-closure filtration: a + d - 1 (the
/// normalization is Cohen-Macaulay for monomial ideals).
inline Exponent filtration_reduction_number(const CanonicalData& CD, std::size_t d) {
  const Exponent r = a_invariant_normalization(CD, d) + static_cast<Exponent>(d) - 1;
  if (r < CD.q - 1) throw InvariantViolation("filtration reduction number below q - 1");
  return r;
}

}  // namespace reesalg
