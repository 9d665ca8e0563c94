#pragma once

// Seeded random m-primary monomial ideals for property runs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "reesalg/monomial_ideal.hpp"

namespace reesalg {

struct CorpusShape {
  std::size_t min_dim = 2;
  std::size_t max_dim = 3;
  std::size_t max_generators = 6;  // before minimalization, pure powers included
  Exponent max_coord = 6;
};

/// Deterministic across platforms: draws come straight from mt19937_64, no
/// library distributions.
class IdealSampler {
 public:
  explicit IdealSampler(std::uint64_t seed, CorpusShape shape = {}) : rng_(seed), shape_(shape) {}

  Exponent uniform(Exponent lo, Exponent hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Exponent>(rng_() % span);
  }

  /// x_j^{c_j} for every j, then up to max_generators - d extra generators.
  MonomialIdeal m_primary() {
    const auto d = static_cast<std::size_t>(
        uniform(static_cast<Exponent>(shape_.min_dim), static_cast<Exponent>(shape_.max_dim)));
    return m_primary(d);
  }

  MonomialIdeal m_primary(std::size_t d) {
    std::vector<ExponentVector> gens;
    for (std::size_t j = 0; j < d; ++j) gens.push_back(ExponentVector::unit(d, j, uniform(1, shape_.max_coord)));
    const auto extra = shape_.max_generators > d ? uniform(0, static_cast<Exponent>(shape_.max_generators - d)) : 0;
    for (Exponent k = 0; k < extra; ++k) gens.push_back(point(d));
    return MonomialIdeal(d, std::move(gens));
  }

  /// Any monomial ideal (possibly not m-primary) with 1..max_generators generators.
  MonomialIdeal any(std::size_t d) {
    std::vector<ExponentVector> gens;
    const auto count = uniform(1, static_cast<Exponent>(shape_.max_generators));
    for (Exponent k = 0; k < count; ++k) gens.push_back(point(d));
    return MonomialIdeal(d, std::move(gens));
  }

  /// Pure powers (x_1^{a_1}, ..., x_d^{a_d}).
  MonomialIdeal complete_intersection(std::size_t d) {
    std::vector<Exponent> a(d);
    for (auto& x : a) x = uniform(1, shape_.max_coord);
    return MonomialIdeal::pure_powers(a);
  }

  std::size_t dim() {
    return static_cast<std::size_t>(
        uniform(static_cast<Exponent>(shape_.min_dim), static_cast<Exponent>(shape_.max_dim)));
  }

  /// A nonzero exponent vector in [0, max_coord]^d.
  ExponentVector point(std::size_t d) {
    ExponentVector v(d);
    do {
      for (std::size_t j = 0; j < d; ++j) v[j] = uniform(0, shape_.max_coord);
    } while (v.is_zero());
    return v;
  }

 private:
  std::mt19937_64 rng_;
  CorpusShape shape_;
};

}  // namespace reesalg
