#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reesalg/errors.hpp"

namespace reesalg {

using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("exponent overflow in addition");
  return out;
}

inline Exponent checked_sub(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("exponent overflow in subtraction");
  return out;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("exponent overflow in multiplication");
  return out;
}

/// An integer point: the exponent of a monomial x^v (length d, entries >= 0),
/// or a lattice point of the Rees cone (length d+1, any sign).
///
/// Ordering is lexicographic, which is the canonical order for generator sets.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n, Exponent fill = 0) : coords_(n, fill) {}
  ExponentVector(std::initializer_list<Exponent> init) : coords_(init) {}
  explicit ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {}

  static ExponentVector unit(std::size_t n, std::size_t j, Exponent scale = 1) {
    ExponentVector e(n);
    e[j] = scale;
    return e;
  }

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  Exponent& operator[](std::size_t i) { return coords_[i]; }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<Exponent>& coords() const { return coords_; }
  std::span<const Exponent> view() const { return coords_; }

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

  bool is_nonnegative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Exponent c) { return c >= 0; });
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Exponent c) { return c == 0; });
  }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] > other.coords_[i]) return false;
    return true;
  }

  Exponent total() const {
    Exponent s = 0;
    for (Exponent c : coords_) s = checked_add(s, c);
    return s;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
    return *this;
  }

  ExponentVector& operator-=(const ExponentVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
    return *this;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend ExponentVector operator*(Exponent k, ExponentVector a) {
    for (auto& c : a.coords_) c = checked_mul(k, c);
    return a;
  }

  /// Dot product with overflow checking.
  Exponent dot(const ExponentVector& o) const {
    require_same_size(o);
    Exponent s = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) s = checked_add(s, checked_mul(coords_[i], o.coords_[i]));
    return s;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(coords_[i]);
    }
    return out + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << v.to_string(); }

 private:
  void require_same_size(const ExponentVector& o) const {
    if (o.coords_.size() != coords_.size())
      throw DimensionMismatch("vector length " + std::to_string(o.coords_.size()) + " vs " +
                              std::to_string(coords_.size()));
  }

  std::vector<Exponent> coords_;
};

/// Componentwise max: the exponent of lcm(x^a, x^b).
inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("lcm of vectors of different length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// Componentwise max(a - b, 0): the exponent of x^a / gcd(x^a, x^b).
inline ExponentVector quotient_floor(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("quotient of vectors of different length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max<Exponent>(a[i] - b[i], 0);
  return out;
}

namespace detail {

/// Number of lattice points in the box prod [lo_j, hi_j]; throws if above budget.
inline std::size_t box_volume(const ExponentVector& lo, const ExponentVector& hi, std::size_t budget) {
  std::size_t vol = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (hi[j] < lo[j]) return 0;
    const auto side = static_cast<std::size_t>(hi[j] - lo[j] + 1);
    if (side > budget || vol > budget / side)
      throw BudgetExceeded("box " + lo.to_string() + ".." + hi.to_string() + " exceeds point budget " +
                           std::to_string(budget));
    vol *= side;
  }
  return vol;
}

/// Visit every lattice point of the box in lexicographic order.
template <class Fn>
void for_each_point(const ExponentVector& lo, const ExponentVector& hi, std::size_t budget, Fn&& fn) {
  if (box_volume(lo, hi, budget) == 0) return;
  ExponentVector v = lo;
  const std::size_t n = v.size();
  while (true) {
    fn(std::as_const(v));
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (v[j] < hi[j]) {
        ++v[j];
        break;
      }
      v[j] = lo[j];
      if (j == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace detail

inline constexpr std::size_t kDefaultPointBudget = 10'000'000;

}  // namespace reesalg
