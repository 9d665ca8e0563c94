#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reesalg/errors.hpp"
#include "reesalg/exponent.hpp"

namespace reesalg {

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim);

/// A monomial ideal of k[x_1..x_d], stored as its minimal generators.
///
/// The generator list is always an antichain under divisibility, deduplicated
/// and sorted lexicographically, so two ideals are equal iff their
/// representations are equal. No generators is the zero ideal; the single
/// generator (0,...,0) is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Builds the ideal generated by `gens` (any generating set).
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens) { *this = minimalize(std::move(gens), dim); }

  static MonomialIdeal zero(std::size_t dim) { return from_canonical(dim, {}); }
  static MonomialIdeal unit(std::size_t dim) { return from_canonical(dim, {ExponentVector(dim)}); }

  /// (x_1^{a_1}, ..., x_d^{a_d})
  static MonomialIdeal pure_powers(const std::vector<Exponent>& a) {
    std::vector<ExponentVector> gens;
    for (std::size_t j = 0; j < a.size(); ++j) gens.push_back(ExponentVector::unit(a.size(), j, a[j]));
    return MonomialIdeal(a.size(), std::move(gens));
  }

  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(std::size_t dim) { return pure_powers(std::vector<Exponent>(dim, 1)); }

  std::size_t dim() const { return dim_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  /// x^v in I, i.e. some generator divides x^v.
  bool contains(const ExponentVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("monomial of length " + std::to_string(v.size()) +
                                                  " tested against ideal in " + std::to_string(dim_) + " variables");
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(v); });
  }

  /// Componentwise max of generator exponents.
  ExponentVector generator_box() const {
    ExponentVector box(dim_);
    for (const auto& g : gens_)
      for (std::size_t j = 0; j < dim_; ++j) box[j] = std::max(box[j], g[j]);
    return box;
  }

  bool operator==(const MonomialIdeal&) const = default;

  /// Internal constructor for generator lists already in canonical form.
  static MonomialIdeal from_canonical(std::size_t dim, std::vector<ExponentVector> gens) {
    MonomialIdeal I;
    I.dim_ = dim;
    I.gens_ = std::move(gens);
    return I;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
};

inline void require_same_dim(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim())
    throw DimensionMismatch("ideals in " + std::to_string(I.dim()) + " and " + std::to_string(J.dim()) +
                            " variables");
}

/// Antichain of componentwise-minimal elements, sorted lexicographically.
///
/// In lex order a proper divisor always precedes its multiples, so one pass
/// that checks each vector against the already-kept ones is enough.
inline MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim) {
  for (const auto& g : gens) {
    if (g.size() != dim)
      throw DimensionMismatch("generator " + g.to_string() + " in ambient dimension " + std::to_string(dim));
    if (!g.is_nonnegative()) throw std::invalid_argument("negative exponent in generator " + g.to_string());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  kept.reserve(gens.size());
  for (auto& v : gens) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.divides(v)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(v));
  }
  return MonomialIdeal::from_canonical(dim, std::move(kept));
}

inline bool contains_monomial(const MonomialIdeal& I, const ExponentVector& v) { return I.contains(v); }

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<ExponentVector> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(std::move(gens), I.dim());
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators() * J.num_generators());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(g + h);
  return minimalize(std::move(gens), I.dim());
}

/// I^n by binary splitting; I^0 is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& I, long n) {
  if (n < 0) throw std::invalid_argument("negative power of an ideal");
  MonomialIdeal result = MonomialIdeal::unit(I.dim());
  MonomialIdeal base = I;
  while (n > 0) {
    if (n & 1) result = product(result, base);
    n >>= 1;
    if (n > 0) base = product(base, base);
  }
  return result;
}

/// I^n with the convention I^n = R for n <= 0 (the extended Rees algebra grading).
inline MonomialIdeal power_or_unit(const MonomialIdeal& I, long n) {
  return n <= 0 ? MonomialIdeal::unit(I.dim()) : power(I, n);
}

/// I ∩ J: pairwise lcms of generators.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators() * J.num_generators());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(lcm(g, h));
  return minimalize(std::move(gens), I.dim());
}

/// I : x^g
inline MonomialIdeal colon_monomial(const MonomialIdeal& I, const ExponentVector& g) {
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators());
  for (const auto& h : I.generators()) gens.push_back(quotient_floor(h, g));
  return minimalize(std::move(gens), I.dim());
}

/// I : J = ∩_{g in gens(J)} (I : x^g). J must be nonzero.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal result = MonomialIdeal::unit(I.dim());
  for (const auto& g : J.generators()) {
    result = intersect(result, colon_monomial(I, g));
    if (result.is_zero()) break;
  }
  return result;
}

/// I ⊆ J
inline bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const ExponentVector& g) { return J.contains(g); });
}

inline bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I, J);
  return I == J;
}

/// Every variable has a pure power among the generators (radical is m).
inline bool is_m_primary(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("m-primary test on the zero or unit ideal");
  for (std::size_t j = 0; j < I.dim(); ++j) {
    const bool has_pure_power = std::any_of(I.generators().begin(), I.generators().end(), [&](const auto& g) {
      for (std::size_t k = 0; k < I.dim(); ++k)
        if (k != j && g[k] != 0) return false;
      return g[j] > 0;
    });
    if (!has_pure_power) return false;
  }
  return true;
}

/// Pure-power exponents (a_1..a_d) if I = (x_1^{a_1}, ..., x_d^{a_d}) exactly.
inline std::optional<std::vector<Exponent>> pure_power_exponents(const MonomialIdeal& I) {
  if (I.num_generators() != I.dim() || I.dim() == 0) return std::nullopt;
  std::vector<Exponent> a(I.dim(), 0);
  for (const auto& g : I.generators()) {
    std::size_t support = 0, where = 0;
    for (std::size_t j = 0; j < I.dim(); ++j)
      if (g[j] != 0) ++support, where = j;
    if (support != 1 || a[where] != 0) return std::nullopt;
    a[where] = g[where];
  }
  return a;
}

inline MonomialIdeal operator+(const MonomialIdeal& I, const MonomialIdeal& J) { return sum(I, J); }
inline MonomialIdeal operator*(const MonomialIdeal& I, const MonomialIdeal& J) { return product(I, J); }

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  os << "(";
  for (std::size_t k = 0; k < I.generators().size(); ++k) os << (k ? ", " : "") << I.generators()[k];
  return os << ")";
}

}  // namespace reesalg
