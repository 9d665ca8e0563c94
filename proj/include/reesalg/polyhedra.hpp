#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "reesalg/errors.hpp"
#include "reesalg/exponent.hpp"
#include "reesalg/monomial_ideal.hpp"

namespace reesalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Rows of an integer matrix (each row an ExponentVector of equal length).
using IntMatrix = std::vector<ExponentVector>;

/// { v : <normal, v> >= offset }, normal primitive.
struct HalfSpace {
  ExponentVector normal;
  Exponent offset = 0;

  Exponent value(const ExponentVector& v) const { return normal.dot(v); }
  bool contains(const ExponentVector& v) const { return value(v) >= offset; }

  auto operator<=>(const HalfSpace&) const = default;
  bool operator==(const HalfSpace&) const = default;
};

/// Half-space description of a Newton polyhedron conv(gens) + R^d_{>=0}.
///
/// `bounded` holds the facets with positive offset (one per Rees valuation),
/// sorted by normal. `coordinate` always holds the d half-spaces x_j >= 0.
struct FacetSystem {
  std::size_t dim = 0;
  std::vector<HalfSpace> bounded;
  std::vector<HalfSpace> coordinate;
  ExponentVector generator_box;  // componentwise max over the source generators
  bool m_primary_source = false;

  bool contains(const ExponentVector& v) const {
    if (v.size() != dim) throw DimensionMismatch("point " + v.to_string() + " vs polyhedron in dimension " +
                                                 std::to_string(dim));
    if (!v.is_nonnegative()) return false;
    return std::all_of(bounded.begin(), bounded.end(), [&](const HalfSpace& h) { return h.contains(v); });
  }

  /// Facets are the same polyhedron (generator box is not part of the identity).
  bool same_polyhedron(const FacetSystem& o) const { return dim == o.dim && bounded == o.bounded; }
};

namespace detail {

inline BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

inline std::vector<BigInt> to_big(const ExponentVector& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (Exponent c : v) out.emplace_back(c);
  return out;
}

inline ExponentVector to_small(const std::vector<BigInt>& v) {
  ExponentVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<Exponent>::max() || v[i] < std::numeric_limits<Exponent>::min())
      throw std::overflow_error("polyhedral data exceeds 64-bit range");
    out[i] = static_cast<Exponent>(v[i]);
  }
  return out;
}

/// Row-echelon rank over Q together with the indices of a maximal independent row set.
inline std::pair<std::size_t, std::vector<std::size_t>> rank_and_basis(const std::vector<std::vector<BigInt>>& rows,
                                                                        std::size_t n) {
  std::vector<std::vector<BigRational>> reduced;  // echelon rows kept so far
  std::vector<std::size_t> pivots, chosen;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < n; ++r) {
    std::vector<BigRational> v(rows[r].begin(), rows[r].end());
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const auto& p = reduced[k];
      const std::size_t col = pivots[k];
      if (v[col] == 0) continue;
      const BigRational f = v[col] / p[col];
      for (std::size_t c = 0; c < n; ++c) v[c] -= f * p[c];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const BigRational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    reduced.push_back(std::move(v));
    chosen.push_back(r);
  }
  return {chosen.size(), chosen};
}

/// Columns of the inverse of a square nonsingular integer matrix, scaled to primitive integer vectors.
inline std::vector<std::vector<BigInt>> inverse_columns(const std::vector<std::vector<BigInt>>& square) {
  const std::size_t n = square.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular initial basis in double description");
    std::swap(a[piv], a[col]);
    const BigRational d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<BigInt>> cols(n, std::vector<BigInt>(n));
  for (std::size_t j = 0; j < n; ++j) {
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt dd = boost::multiprecision::denominator(a[i][n + j]);
      den = den / boost::multiprecision::gcd(den, dd) * dd;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const BigRational scaled = a[i][n + j] * den;
      cols[j][i] = boost::multiprecision::numerator(scaled);
    }
    make_primitive(cols[j]);
  }
  return cols;
}

}  // namespace detail

/// Primitive generators of the extreme rays of the cone { x in R^n : M x >= 0 }.
///
/// Double description with exact integer arithmetic: start from the simplicial
/// cone cut out by n independent rows, then intersect with the remaining rows
/// one at a time, combining adjacent positive/negative ray pairs (combinatorial
/// adjacency test on the sets of tight rows). Output is sorted lexicographically.
inline std::vector<ExponentVector> extreme_rays(const IntMatrix& M, std::size_t n) {
  if (n == 0) throw std::invalid_argument("extreme_rays: ambient dimension 0");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(M.size());
  for (const auto& r : M) {
    if (r.size() != n) throw DimensionMismatch("extreme_rays: row " + r.to_string() + " not of length " +
                                               std::to_string(n));
    rows.push_back(detail::to_big(r));
  }
  auto [rank, basis] = detail::rank_and_basis(rows, n);
  if (rank < n) throw std::invalid_argument("extreme_rays: cone is not pointed (constraint rank " +
                                            std::to_string(rank) + " < " + std::to_string(n) + ")");

  const std::size_t m = rows.size();
  struct Ray {
    std::vector<BigInt> v;
    boost::dynamic_bitset<> tight;
  };
  std::vector<Ray> rays;
  {
    std::vector<std::vector<BigInt>> square;
    for (std::size_t idx : basis) square.push_back(rows[idx]);
    auto cols = detail::inverse_columns(square);
    for (std::size_t j = 0; j < n; ++j) {
      Ray r{std::move(cols[j]), boost::dynamic_bitset<>(m)};
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.tight.set(basis[k]);
      rays.push_back(std::move(r));
    }
  }

  std::vector<bool> processed(m, false);
  for (std::size_t idx : basis) processed[idx] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    std::vector<BigInt> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = detail::dot(rows[row], rays[k].v);
      if (val[k] > 0)
        pos.push_back(k);
      else if (val[k] < 0)
        neg.push_back(k);
      else
        zer.push_back(k);
    }
    std::vector<Ray> next;
    for (std::size_t k : pos) next.push_back(rays[k]);
    for (std::size_t k : zer) {
      next.push_back(rays[k]);
      next.back().tight.set(row);
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const auto common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.is_subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{std::vector<BigInt>(n), common};
        for (std::size_t c = 0; c < n; ++c) r.v[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
        detail::make_primitive(r.v);
        r.tight.set(row);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    if (rays.empty()) break;
  }

  std::vector<std::vector<BigInt>> ray_vectors;
  for (const auto& r : rays) ray_vectors.push_back(r.v);
  if (detail::rank_and_basis(ray_vectors, n).first < n)
    throw std::invalid_argument("extreme_rays: cone is not full-dimensional");

  std::vector<ExponentVector> out;
  out.reserve(rays.size());
  for (const auto& r : rays) out.push_back(detail::to_small(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Facets of NP(I) = conv(gens(I)) + R^d_{>=0}.
///
/// The facets are the extreme rays of the dual of the homogenization cone
/// generated by (g, 1) for g in gens(I) and (e_j, 0): a dual ray (a, -h) with
/// h > 0 is the bounded facet <a, v> >= h. The ray (0,...,0,1) is the face at
/// infinity and is dropped.
inline FacetSystem newton_polyhedron(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("Newton polyhedron of the zero or unit ideal");
  const std::size_t d = I.dim();
  IntMatrix homog;
  for (const auto& g : I.generators()) {
    ExponentVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = g[j];
    row[d] = 1;
    homog.push_back(row);
  }
  for (std::size_t j = 0; j < d; ++j) homog.push_back(ExponentVector::unit(d + 1, j));

  FacetSystem F;
  F.dim = d;
  F.generator_box = I.generator_box();
  F.m_primary_source = is_m_primary(I);
  for (const auto& c : extreme_rays(homog, d + 1)) {
    ExponentVector a(std::vector<Exponent>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d)));
    const Exponent last = c[d];
    if (a.is_zero()) continue;
    if (last < 0) F.bounded.push_back(HalfSpace{a, -last});
    // last == 0: a coordinate facet, re-added uniformly below
  }
  std::sort(F.bounded.begin(), F.bounded.end());
  for (std::size_t j = 0; j < d; ++j) F.coordinate.push_back(HalfSpace{ExponentVector::unit(d, j), 0});
  return F;
}

/// The largest n with x^v in closure(I^n), given v >= 0 (n = 0 when v is outside NP(I)).
inline Exponent closure_order(const FacetSystem& F, const ExponentVector& v) {
  if (F.bounded.empty()) return std::numeric_limits<Exponent>::max();
  Exponent best = std::numeric_limits<Exponent>::max();
  for (const auto& h : F.bounded) best = std::min(best, h.value(v) / h.offset);
  return best;
}

/// x^v in closure(I^n): <a_i, v> >= n h_i on every bounded facet.
inline bool closure_power_member(const FacetSystem& F, const ExponentVector& v, Exponent n) {
  if (n <= 0) throw std::invalid_argument("closure_power_member: n must be positive");
  if (v.size() != F.dim) throw DimensionMismatch("closure_power_member: point " + v.to_string());
  if (!v.is_nonnegative()) return false;
  return std::all_of(F.bounded.begin(), F.bounded.end(),
                     [&](const HalfSpace& h) { return h.value(v) >= checked_mul(n, h.offset); });
}

/// Filtration term closure(I^n), with closure(I^n) = R for n <= 0.
///
/// Minimal generators lie in the box [0, n*M] with M the generator box of I:
/// if v is in n*NP(I) and v_j > n*M_j, then v - e_j is still in n*NP(I).
inline MonomialIdeal closure_power(const FacetSystem& F, Exponent n, std::size_t budget = kDefaultPointBudget) {
  if (n <= 0) return MonomialIdeal::unit(F.dim);
  const ExponentVector hi = n * F.generator_box;
  std::vector<ExponentVector> pts;
  detail::for_each_point(ExponentVector(F.dim), hi, budget, [&](const ExponentVector& v) {
    for (const auto& h : F.bounded)
      if (h.value(v) < n * h.offset) return;
    pts.push_back(v);
  });
  return minimalize(std::move(pts), F.dim);
}

inline MonomialIdeal integral_closure(const FacetSystem& F, std::size_t budget = kDefaultPointBudget) {
  return closure_power(F, 1, budget);
}

inline MonomialIdeal integral_closure(const MonomialIdeal& I, std::size_t budget = kDefaultPointBudget) {
  return integral_closure(newton_polyhedron(I), budget);
}

/// Each bounded facet is tight on at least d affinely independent points among
/// the source generators and generator + ray directions. Used as a sanity
/// check on the facet enumeration.
inline bool facets_are_supported(const FacetSystem& F, const MonomialIdeal& I) {
  const std::size_t d = F.dim;
  for (const auto& h : F.bounded) {
    std::vector<std::vector<BigInt>> tight;  // homogenized: (g,1) for tight points, (e_j,0) for tight directions
    for (const auto& g : I.generators()) {
      if (!h.contains(g)) return false;
      if (h.value(g) == h.offset) {
        auto row = detail::to_big(g);
        row.emplace_back(1);
        tight.push_back(std::move(row));
      }
    }
    for (std::size_t j = 0; j < d; ++j)
      if (h.normal[j] == 0) {
        std::vector<BigInt> row(d + 1);
        row[j] = 1;
        tight.push_back(std::move(row));
      }
    if (detail::rank_and_basis(tight, d + 1).first < d) return false;
  }
  return true;
}

}  // namespace reesalg
