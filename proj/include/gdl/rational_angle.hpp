/**
 * @file rational_angle.hpp
 * @brief Exact rational multiples of a full turn, for character phases.
 *
 * Mathematical background:
 *   Characters of a finite abelian group Z_{N1} x ... x Z_{Nk} take values
 *   exp(2πi·p/q) with p/q rational. Representing the exponent as an exact
 *   reduced fraction of a turn makes phase identities — commutation tests,
 *   adjoint-subgroup membership, cocycle algebra — decidable with integer
 *   arithmetic instead of floating-point comparisons against 1.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gdl {

/// An angle p/q ∈ [0,1) of a full turn, stored as a reduced fraction.
/// Arithmetic is exact; all angles arising from finite-group characters
/// have denominators dividing lcm(N_1,...,N_k), far below overflow.
class RationalAngle {
 public:
  /// The zero angle.
  RationalAngle() = default;

  /// Builds num/den reduced into [0,1). @throws std::invalid_argument if den == 0.
  static RationalAngle from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("RationalAngle: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    return RationalAngle(num / g, den / g);
  }

  /// Sum modulo one turn.
  RationalAngle operator+(RationalAngle o) const {
    const std::int64_t l = std::lcm(den_, o.den_);
    return from_fraction(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  }

  /// Difference modulo one turn.
  RationalAngle operator-(RationalAngle o) const { return *this + (-o); }

  /// Reflection modulo one turn.
  RationalAngle operator-() const { return from_fraction(-num_, den_); }

  bool operator==(const RationalAngle& o) const = default;

  /// True iff the angle is ≡ 0 (mod 1), i.e. the phase factor is exactly 1.
  bool is_zero() const { return num_ == 0; }

  /// The fraction of a full turn, in [0,1).
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// exp(2πi·turns()).
  std::complex<double> to_complex() const {
    const double a = 2.0 * std::numbers::pi * turns();
    return {std::cos(a), std::sin(a)};
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

 private:
  RationalAngle(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;  ///< reduced numerator, 0 ≤ num_ < den_
  std::int64_t den_ = 1;  ///< positive denominator
};

}  // namespace gdl
