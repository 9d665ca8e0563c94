#pragma once

// Brute-force reference implementations. Nothing here calls the colon,
// intersection, power, or facet code: membership is plain divisibility over
// raw generator lists, and every answer comes from enumerating a box.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reesalg/errors.hpp"
#include "reesalg/exponent.hpp"
#include "reesalg/monomial_ideal.hpp"
#include "reesalg/rees_cone.hpp"

namespace reesalg::oracle {

/// Inclusive box [0, upper_j] with a hard cap on the number of points.
struct Box {
  std::vector<Exponent> upper;
  std::size_t budget = kDefaultPointBudget;

  std::size_t points() const {
    std::size_t n = 1;
    for (Exponent u : upper) {
      if (u < 0) throw std::invalid_argument("box bound must be >= 0");
      const auto side = static_cast<std::size_t>(u) + 1;
      if (n > budget / side) throw BudgetExceeded("oracle box exceeds budget of " + std::to_string(budget) + " points");
      n *= side;
    }
    return n;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    const std::size_t total = points();
    std::vector<Exponent> v(upper.size(), 0);
    for (std::size_t count = 0; count < total; ++count) {
      fn(v);
      for (std::size_t j = upper.size(); j-- > 0;) {
        if (v[j] < upper[j]) {
          ++v[j];
          break;
        }
        v[j] = 0;
      }
    }
  }

  /// [0, 1 + max coordinate over the given generator lists]^dim
  static Box covering(std::size_t dim, const std::vector<std::vector<ExponentVector>>& gen_lists, Exponent pad = 1) {
    Exponent m = 0;
    for (const auto& gens : gen_lists)
      for (const auto& g : gens)
        for (Exponent c : g) m = std::max(m, c);
    return Box{std::vector<Exponent>(dim, m + pad)};
  }
};

namespace raw {

inline bool leq(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const std::vector<ExponentVector>& gens, const std::vector<Exponent>& v) {
  for (const auto& g : gens)
    if (leq(g.coords(), v)) return true;
  return false;
}

/// Naive quadratic minimal-element filter.
inline std::vector<ExponentVector> minimal_elements(const std::vector<std::vector<Exponent>>& pts) {
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < pts.size() && minimal; ++k)
      if (k != i && leq(pts[k], pts[i]) && pts[k] != pts[i]) minimal = false;
    if (minimal) out.emplace_back(pts[i]);
  }
  return out;
}

}  // namespace raw

/// Memoized membership v in I^n through the order function
/// ord(v) = max number of generators (with repetition) whose sum is <= v,
/// computed by subtracting one generator at a time. v in I^n iff ord(v) >= n.
class PowerMembership {
 public:
  explicit PowerMembership(std::vector<ExponentVector> gens, std::size_t budget = 4'000'000)
      : gens_(std::move(gens)), budget_(budget) {}

  bool operator()(const std::vector<Exponent>& v, Exponent n) {
    for (Exponent c : v)
      if (c < 0) return false;
    if (n <= 0) return true;
    return order(v) >= n;
  }

  Exponent order(const std::vector<Exponent>& v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) throw BudgetExceeded("power-membership memo exceeds budget");
    Exponent best = 0;
    for (const auto& g : gens_) {
      if (!raw::leq(g.coords(), v)) continue;
      std::vector<Exponent> rest(v);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= g[i];
      if (rest == v) continue;  // the unit generator adds nothing
      best = std::max(best, 1 + order(rest));
    }
    memo_.emplace(v, best);
    return best;
  }

 private:
  std::vector<ExponentVector> gens_;
  std::size_t budget_;
  std::map<std::vector<Exponent>, Exponent> memo_;
};

/// x^v in I^n by dynamic programming over generator subtraction. n = 0 gives v >= 0.
inline bool oracle_power_member(const ExponentVector& v, const MonomialIdeal& I, Exponent n) {
  if (n < 0) throw std::invalid_argument("oracle_power_member: negative power");
  if (v.size() != I.dim()) throw DimensionMismatch("oracle_power_member: length mismatch");
  PowerMembership dp(I.generators());
  return dp(v.coords(), n);
}

/// Valuative definition of integral closure: x^{kv} in I^k for some 1 <= k <= k_max.
/// Sound once k_max is a multiple of every bounded-facet offset of NP(I).
inline bool oracle_iclosure_member(const ExponentVector& v, PowerMembership& dp, Exponent k_max) {
  for (Exponent k = 1; k <= k_max; ++k) {
    std::vector<Exponent> kv(v.coords());
    for (auto& c : kv) c *= k;
    if (dp(kv, k)) return true;
  }
  return false;
}

inline bool oracle_iclosure_member(const ExponentVector& v, const MonomialIdeal& I, Exponent k_max) {
  if (v.size() != I.dim()) throw DimensionMismatch("oracle_iclosure_member: length mismatch");
  PowerMembership dp(I.generators());
  return oracle_iclosure_member(v, dp, k_max);
}

/// I : J by enumeration: keep v with v + g in I for every generator g of J.
inline MonomialIdeal oracle_colon(const MonomialIdeal& I, const MonomialIdeal& J, const Box& box) {
  if (I.dim() != J.dim() || box.upper.size() != I.dim()) throw DimensionMismatch("oracle_colon: dimension mismatch");
  std::vector<std::vector<Exponent>> hits;
  box.for_each([&](const std::vector<Exponent>& v) {
    for (const auto& g : J.generators()) {
      std::vector<Exponent> w(v);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += g[i];
      if (!raw::member(I.generators(), w)) return;
    }
    hits.push_back(v);
  });
  return MonomialIdeal(I.dim(), raw::minimal_elements(hits));
}

/// I ∩ J by enumeration.
inline MonomialIdeal oracle_intersect(const MonomialIdeal& I, const MonomialIdeal& J, const Box& box) {
  if (I.dim() != J.dim() || box.upper.size() != I.dim()) throw DimensionMismatch("oracle_intersect: dimension mismatch");
  std::vector<std::vector<Exponent>> hits;
  box.for_each([&](const std::vector<Exponent>& v) {
    if (raw::member(I.generators(), v) && raw::member(J.generators(), v)) hits.push_back(v);
  });
  return MonomialIdeal(I.dim(), raw::minimal_elements(hits));
}

/// Lattice points of the box with rows . v >= 1 for every row.
inline std::vector<ExponentVector> oracle_relint_points(const std::vector<ExponentVector>& rows, const Box& box) {
  std::vector<ExponentVector> out;
  box.for_each([&](const std::vector<Exponent>& v) {
    for (const auto& row : rows) {
      if (row.size() != v.size()) throw DimensionMismatch("oracle_relint_points: row length");
      Exponent s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += row[i] * v[i];
      if (s < 1) return;
    }
    out.emplace_back(v);
  });
  return out;
}

inline std::vector<ExponentVector> oracle_relint_points(const ReesCone& RC, const Box& box) {
  return oracle_relint_points(RC.rows, box);
}

}  // namespace reesalg::oracle
