#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reesalg/errors.hpp"
#include "reesalg/exponent.hpp"
#include "reesalg/monomial_ideal.hpp"
#include "reesalg/polyhedra.hpp"
#include "reesalg/rees_cone.hpp"

namespace reesalg {

inline constexpr Exponent kReductionHorizon = 20;

/// Powers I^0, I^1, ... computed on demand. Local to one computation.
class PowerSequence {
 public:
  explicit PowerSequence(MonomialIdeal base) : base_(std::move(base)) { powers_.push_back(MonomialIdeal::unit(base_.dim())); }

  /// I^n, with I^n = R for n <= 0.
  const MonomialIdeal& operator[](Exponent n) {
    if (n <= 0) return powers_.front();
    while (static_cast<Exponent>(powers_.size()) <= n) powers_.push_back(product(powers_.back(), base_));
    return powers_[static_cast<std::size_t>(n)];
  }

  const MonomialIdeal& base() const { return base_; }

 private:
  MonomialIdeal base_;
  std::deque<MonomialIdeal> powers_;  // stable references across growth
};

/// All exponent vectors outside an m-primary ideal (its finite staircase).
inline std::vector<ExponentVector> staircase(const MonomialIdeal& I, std::size_t budget = kDefaultPointBudget) {
  if (I.is_zero()) throw std::invalid_argument("staircase of the zero ideal is infinite");
  if (I.is_unit()) return {};
  if (!is_m_primary(I)) throw Inapplicable("staircase of a non-m-primary ideal is infinite");
  const std::size_t d = I.dim();
  ExponentVector hi = I.generator_box();
  for (auto& c : hi) c -= 1;
  // in[v] = v is a generator, or v - e_j is in I for some j. Row-major index over the box.
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t j = d; j-- > 1;) stride[j - 1] = stride[j] * static_cast<std::size_t>(hi[j] + 1);
  const std::size_t vol = detail::box_volume(ExponentVector(d), hi, budget);
  std::vector<char> in(vol, 0);
  for (const auto& g : I.generators()) {
    bool inside = true;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (g[j] > hi[j]) inside = false;
      idx += stride[j] * static_cast<std::size_t>(std::min(g[j], hi[j]));
    }
    if (inside) in[idx] = 1;
  }
  std::vector<ExponentVector> out;
  std::size_t idx = 0;
  detail::for_each_point(ExponentVector(d), hi, budget, [&](const ExponentVector& v) {
    if (!in[idx])
      for (std::size_t j = 0; j < d; ++j)
        if (v[j] > 0 && in[idx - stride[j]]) {
          in[idx] = 1;
          break;
        }
    if (!in[idx]) out.push_back(v);
    ++idx;
  });
  return out;
}

/// J is a reduction of I (J ⊆ I required). Decided by NP(J) = NP(I) and
/// cross-checked by searching n <= horizon with J I^n = I^{n+1}.
inline bool is_monomial_reduction(const MonomialIdeal& J, const MonomialIdeal& I,
                                  Exponent horizon = kReductionHorizon) {
  require_same_dim(J, I);
  if (!is_subset(J, I)) throw std::invalid_argument("is_monomial_reduction: J is not contained in I");
  if (J.is_zero()) return I.is_zero();
  if (J.is_unit() || I.is_unit()) return J == I;
  const bool same_np = newton_polyhedron(J).same_polyhedron(newton_polyhedron(I));
  PowerSequence Ipow(I);
  bool found = false;
  for (Exponent n = 0; n <= horizon && !found; ++n) found = product(J, Ipow[n]) == Ipow[n + 1];
  if (same_np != found)
    throw InvariantViolation("reduction test disagreement: Newton polyhedra " + std::string(same_np ? "equal" : "differ") +
                             ", J I^n = I^{n+1} " + (found ? "found" : "not found") + " for n <= " +
                             std::to_string(horizon));
  return same_np;
}

/// The pure-power reduction (x_1^{h/a_1}, ..., x_d^{h/a_d}) when NP(I) has a
/// single bounded facet <a, v> >= h, i.e. when I has one Rees valuation.
inline std::optional<MonomialIdeal> find_pure_power_reduction(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit() || !is_m_primary(I)) return std::nullopt;
  const auto F = newton_polyhedron(I);
  if (F.bounded.size() != 1) return std::nullopt;
  const auto& facet = F.bounded.front();
  std::vector<Exponent> c(I.dim());
  for (std::size_t j = 0; j < I.dim(); ++j) {
    const Exponent a = facet.normal[j];
    if (a <= 0) return std::nullopt;
    c[j] = (facet.offset + a - 1) / a;
  }
  auto J = MonomialIdeal::pure_powers(c);
  if (!is_subset(J, I) || !is_monomial_reduction(J, I)) return std::nullopt;
  return J;
}

namespace detail {

inline void require_reduction(const MonomialIdeal& J, const MonomialIdeal& I) {
  require_same_dim(J, I);
  if (!is_subset(J, I)) throw std::invalid_argument("J is not contained in I");
  if (!newton_polyhedron(J).same_polyhedron(newton_polyhedron(I)))
    throw std::invalid_argument("J is not a reduction of I");
}

inline Exponent reduction_number_unchecked(const MonomialIdeal& J, PowerSequence& Ipow, Exponent horizon) {
  for (Exponent n = 0; n <= horizon; ++n)
    if (product(J, Ipow[n]) == Ipow[n + 1]) return n;
  throw InvariantViolation("reduction number exceeds horizon " + std::to_string(horizon));
}

inline Exponent nilpotency_unchecked(const MonomialIdeal& J, PowerSequence& Ipow, Exponent horizon) {
  for (Exponent i = 0; i <= horizon; ++i)
    if (is_subset(Ipow[i + 1], J)) return i;
  throw InvariantViolation("index of nilpotency exceeds horizon " + std::to_string(horizon));
}

/// max over v outside J of the closure order of v, i.e. min{ i : closure(I^{i+1}) ⊆ J }.
inline Exponent filtration_nilpotency(const MonomialIdeal& J, const FacetSystem& F) {
  Exponent best = 0;
  for (const auto& v : staircase(J)) best = std::max(best, closure_order(F, v));
  return best;
}

}  // namespace detail

/// r_J(I): least n with J I^n = I^{n+1}.
inline Exponent reduction_number(const MonomialIdeal& J, const MonomialIdeal& I, Exponent horizon = 64) {
  detail::require_reduction(J, I);
  PowerSequence Ipow(I);
  return detail::reduction_number_unchecked(J, Ipow, horizon);
}

/// s_J(I): least i with I^{i+1} ⊆ J.
inline Exponent index_of_nilpotency(const MonomialIdeal& J, const MonomialIdeal& I, Exponent horizon = 64) {
  detail::require_reduction(J, I);
  PowerSequence Ipow(I);
  return detail::nilpotency_unchecked(J, Ipow, horizon);
}

/// s_J(F) for the integral-closure filtration F_i = closure(I^i).
inline Exponent index_of_nilpotency_filtration(const MonomialIdeal& J, const MonomialIdeal& I) {
  detail::require_reduction(J, I);
  return detail::filtration_nilpotency(J, newton_polyhedron(I));
}

struct ReductionData {
  MonomialIdeal J;
  MonomialIdeal I;
  Exponent r = 0;
  Exponent s = 0;
  Exponent s_bar = 0;
  std::size_t mu_J = 0;
};

inline ReductionData reduction_data(const MonomialIdeal& J, const MonomialIdeal& I) {
  detail::require_reduction(J, I);
  ReductionData out{J, I, 0, 0, 0, J.num_generators()};
  PowerSequence Ipow(I);
  out.r = detail::reduction_number_unchecked(J, Ipow, 64);
  out.s = detail::nilpotency_unchecked(J, Ipow, out.r);
  out.s_bar = detail::filtration_nilpotency(J, newton_polyhedron(I));
  if (out.s > out.r || out.s_bar < out.s) throw InvariantViolation("expected s <= r and s_bar >= s");
  return out;
}

namespace detail {

inline void require_d_generated(const MonomialIdeal& J) {
  if (J.num_generators() != J.dim())
    throw Inapplicable("reduction has " + std::to_string(J.num_generators()) + " generators, need d = " +
                       std::to_string(J.dim()));
}

}  // namespace detail

/// The graded piece J^{i+k} : I^k of the canonical module of R[It, t^{-1}]
/// (unit ideal when i + k <= 0). Needs k >= r_J(I) and mu(J) = d.
inline MonomialIdeal canonical_piece(const MonomialIdeal& J, const MonomialIdeal& I, Exponent i, Exponent k) {
  detail::require_d_generated(J);
  const Exponent r = reduction_number(J, I);
  if (k < r) throw std::invalid_argument("canonical_piece: k = " + std::to_string(k) + " < r = " + std::to_string(r));
  if (i + k <= 0) return MonomialIdeal::unit(I.dim());
  return colon(power(J, i + k), power(I, k));
}

struct QGVerdict {
  bool quasi_gorenstein = false;
  std::optional<Exponent> a;       // a-invariant of R[It, t^{-1}] when quasi-Gorenstein
  Exponent range_lo = 0;           // identity checked for range_lo <= i <= range_hi
  Exponent range_hi = 0;
  Exponent probe_index = 0;        // extra index checked past the window
  std::optional<Exponent> u;       // r - d + 1 - a = max{ n : I^r ⊆ J^n }
  Exponent candidate_lo = 0;       // candidates a in [s - d + 1, r - d + 1]
  Exponent candidate_hi = 0;
  Exponent r = 0;
  Exponent s = 0;
};

/// Colon criterion: R[It, t^{-1}] is quasi-Gorenstein with a-invariant a iff
/// J^i : I^r = I^{i + a - (r - d + 1)} for all i. Checked on a bounded window
/// of i (default |i| <= r + d + 2) plus the index just past it.
inline QGVerdict quasi_gorenstein_test(const MonomialIdeal& J, const MonomialIdeal& I,
                                       std::optional<Exponent> window = std::nullopt) {
  require_same_dim(J, I);
  detail::require_d_generated(J);
  if (!is_subset(J, I) || !newton_polyhedron(J).same_polyhedron(newton_polyhedron(I)))
    throw Inapplicable("supplied J is not a monomial reduction of I");
  const auto d = static_cast<Exponent>(I.dim());
  PowerSequence Ipow(I), Jpow(J);
  QGVerdict v;
  v.r = detail::reduction_number_unchecked(J, Ipow, 64);
  v.s = detail::nilpotency_unchecked(J, Ipow, v.r);
  const Exponent W = window.value_or(v.r + d + 2);
  if (W < 0) throw std::invalid_argument("negative window");
  v.range_lo = -W;
  v.range_hi = W;
  v.probe_index = W + 1;
  v.candidate_lo = v.s - d + 1;
  v.candidate_hi = v.r - d + 1;

  const MonomialIdeal& Ir = Ipow[v.r];
  std::vector<MonomialIdeal> lhs;  // J^i : I^r for i in [-W, W+1]
  for (Exponent i = -W; i <= W + 1; ++i) lhs.push_back(i <= 0 ? MonomialIdeal::unit(I.dim()) : colon(Jpow[i], Ir));

  std::vector<Exponent> passing;
  for (Exponent a = v.candidate_lo; a <= v.candidate_hi; ++a) {
    const Exponent shift = a - (v.r - d + 1);
    bool ok = true;
    for (Exponent i = -W; i <= W + 1 && ok; ++i) ok = lhs[static_cast<std::size_t>(i + W)] == Ipow[i + shift];
    if (ok) passing.push_back(a);
  }
  if (passing.size() > 1) throw InvariantViolation("several a-invariants satisfy the colon criterion");
  if (passing.empty()) return v;

  v.quasi_gorenstein = true;
  v.a = passing.front();
  v.u = v.r - d + 1 - *v.a;
  Exponent n = 0;
  while (is_subset(Ir, Jpow[n + 1])) ++n;
  if (n != *v.u)
    throw InvariantViolation("max{ n : I^r ⊆ J^n } = " + std::to_string(n) + " but r - d + 1 - a = " +
                             std::to_string(*v.u));
  return v;
}

/// J ∩ I^i ⊆ J I^{i-1} for 1 <= i <= r_J(I).
inline bool valabrega_valla_test(const MonomialIdeal& J, const MonomialIdeal& I) {
  detail::require_reduction(J, I);
  PowerSequence Ipow(I);
  const Exponent r = detail::reduction_number_unchecked(J, Ipow, 64);
  for (Exponent i = 1; i <= r; ++i)
    if (!is_subset(intersect(J, Ipow[i]), product(J, Ipow[i - 1]))) return false;
  return true;
}

/// J ∩ I^i = J I^{i-1} for i = 1, 2.
inline bool two_standard_test(const MonomialIdeal& J, const MonomialIdeal& I) {
  detail::require_reduction(J, I);
  PowerSequence Ipow(I);
  for (Exponent i = 1; i <= 2; ++i)
    if (intersect(J, Ipow[i]) != product(J, Ipow[i - 1])) return false;
  return true;
}

struct CoreResult {
  Exponent u = 1;
  MonomialIdeal core;
  Exponent start = 0;       // first n tried (reduction number of I^u w.r.t. J^{[u]})
  Exponent stabilized = 0;  // n with J'^{n+1} : I'^n = J'^{n+2} : I'^{n+1}
};

/// core(I^u) = (J^{[u]})^{n+1} : (I^u)^n once the colons stabilize, n >= r.
/// Valid in residue characteristic 0 or > r(I); the exponent arithmetic itself
/// does not see the characteristic.
inline CoreResult core_compute(const MonomialIdeal& I, const MonomialIdeal& J, Exponent u) {
  if (u <= 0) throw std::invalid_argument("core_compute: u must be positive");
  require_same_dim(I, J);
  const auto c = pure_power_exponents(J);
  if (!c) throw Inapplicable("core computation needs a d-generated pure-power reduction");
  detail::require_reduction(J, I);
  std::vector<Exponent> cu(*c);
  for (auto& x : cu) x = checked_mul(x, u);
  const auto Jp = MonomialIdeal::pure_powers(cu);
  const auto Ip = power(I, u);
  PowerSequence Jpow(Jp), Ipow(Ip);
  CoreResult out;
  out.u = u;
  out.start = detail::reduction_number_unchecked(Jp, Ipow, 64);
  const Exponent limit = out.start + static_cast<Exponent>(I.dim()) + 4;
  MonomialIdeal prev = colon(Jpow[out.start + 1], Ipow[out.start]);
  for (Exponent n = out.start; n < limit; ++n) {
    MonomialIdeal next = colon(Jpow[n + 2], Ipow[n + 1]);
    if (next == prev) {
      out.core = std::move(prev);
      out.stabilized = n;
      return out;
    }
    prev = std::move(next);
  }
  throw InvariantViolation("core colons did not stabilize for n in [" + std::to_string(out.start) + ", " +
                           std::to_string(limit) + "]");
}

/// core(I^u) = I^{du + a}.
inline bool core_theorem_check(const MonomialIdeal& I, const MonomialIdeal& J, Exponent u, Exponent a) {
  const auto result = core_compute(I, J, u);
  return result.core == power_or_unit(I, static_cast<Exponent>(I.dim()) * u + a);
}

struct ConductorExponent {
  Exponent q = 0;
  Exponent horizon = 0;
};

/// Least q >= 0 with closure(I^{n+q}) ⊆ I^n for 1 <= n <= horizon.
inline ConductorExponent conductor_t_exponent(const MonomialIdeal& I, Exponent horizon) {
  if (horizon < 1) throw std::invalid_argument("conductor horizon must be >= 1");
  if (!is_m_primary(I)) throw Inapplicable("conductor exponent needs an m-primary ideal");
  const auto F = newton_polyhedron(I);
  PowerSequence Ipow(I);
  ConductorExponent out{0, horizon};
  for (Exponent n = 1; n <= horizon; ++n)
    for (const auto& v : staircase(Ipow[n])) out.q = std::max(out.q, closure_order(F, v) - n + 1);
  if (out.q > horizon)
    throw HorizonExceeded("no conductor exponent q <= " + std::to_string(horizon) + " (needed " +
                             std::to_string(out.q) + ")");
  return out;
}

struct ConsistencyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  bool skipped = false;  // not decidable within the horizon
};

/// Cross-checks between the colon criterion, the Rees cone, and the closure filtration:
///   a(normalization) = s_J(F) - d + 1,
///   a(normalization) = a(T) + conductor exponent,
///   a(T) = s_J(I) - d + 1 (asserted when s = r, reported in general).
inline std::vector<ConsistencyCheck> a_invariant_consistency(const MonomialIdeal& I, const MonomialIdeal& J,
                                                             const QGVerdict& verdict, Exponent a_normalization,
                                                             Exponent conductor_horizon = 8) {
  if (!verdict.quasi_gorenstein || !verdict.a) throw std::invalid_argument("consistency checks need a quasi-Gorenstein verdict");
  const auto d = static_cast<Exponent>(I.dim());
  const auto data = reduction_data(J, I);
  std::optional<ConductorExponent> cond;
  std::string cond_error;
  try {
    cond = conductor_t_exponent(I, conductor_horizon);
  } catch (const HorizonExceeded& e) {
    cond_error = e.what();
  }
  const Exponent aT = *verdict.a;
  std::vector<ConsistencyCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail) { out.push_back({std::move(name), ok, std::move(detail)}); };
  add("normalization_a_equals_filtration_nilpotency", a_normalization == data.s_bar - d + 1,
      "a(normalization) = " + std::to_string(a_normalization) + ", s_J(F) - d + 1 = " + std::to_string(data.s_bar - d + 1));
  if (cond)
    add("normalization_a_equals_a_plus_conductor", a_normalization == aT + cond->q,
        "a(normalization) = " + std::to_string(a_normalization) + ", a(T) + q = " + std::to_string(aT) + " + " +
            std::to_string(cond->q) + " (conductor verified for n <= " + std::to_string(cond->horizon) + ")");
  else
    out.push_back({"normalization_a_equals_a_plus_conductor", false, cond_error, true});
  if (data.s == data.r)
    add("a_equals_nilpotency_when_s_equals_r", aT == data.s - d + 1,
        "a(T) = " + std::to_string(aT) + ", s_J(I) - d + 1 = " + std::to_string(data.s - d + 1));
  add("a_equals_nilpotency", aT == data.s - d + 1,
      "a(T) = " + std::to_string(aT) + ", s_J(I) - d + 1 = " + std::to_string(data.s - d + 1));
  return out;
}

}  // namespace reesalg
