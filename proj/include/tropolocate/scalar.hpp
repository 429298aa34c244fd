#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "tropolocate/errors.hpp"

namespace tropo {

/// Absolute tolerance used by default when comparing finite values.
inline constexpr double kDefaultTol = 1e-9;

/// The bottom element of the max-plus semifield, IEEE negative infinity.
inline constexpr double kBottom = -std::numeric_limits<double>::infinity();

/// Element of the max-plus semifield: a finite real or the bottom
/// element -inf.  Addition is max, multiplication is conventional +.
/// NaN and +inf are rejected at construction, so a Scalar is always
/// a valid semifield element and comparisons are total.
class Scalar {
 public:
  constexpr Scalar() : v_(kBottom) {}

  constexpr Scalar(double x) : v_(x) {
    if (x != x || x == std::numeric_limits<double>::infinity())
      throw DomainError("scalar must be finite or -inf");
  }

  static constexpr Scalar zero() { return Scalar(); }
  static constexpr Scalar one() { return Scalar(0.0); }

  constexpr bool is_zero() const { return v_ == kBottom; }
  constexpr bool is_finite() const { return v_ != kBottom; }

  /// Underlying real value; -inf for the zero element.
  constexpr double value() const { return v_; }

  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;

 private:
  double v_;
};

/// Semifield addition: max in the natural linear order.
constexpr Scalar oplus(Scalar a, Scalar b) { return a < b ? b : a; }

/// Semifield multiplication: conventional addition, with -inf absorbing.
constexpr Scalar otimes(Scalar a, Scalar b) {
  if (a.is_zero() || b.is_zero()) return Scalar::zero();
  return Scalar(a.value() + b.value());
}

/// Multiplicative inverse (conventional negation).  The zero element is
/// kept fixed, matching the pseudo-inverse convention for vectors.
constexpr Scalar inv(Scalar a) {
  return a.is_zero() ? a : Scalar(-a.value());
}

/// Rational power, conventionally r*a.  Only integer and half-integer
/// exponents are accepted; the zero element requires r > 0.
inline Scalar power(Scalar a, double r) {
  const double doubled = 2.0 * r;
  if (doubled != doubled || std::nearbyint(doubled) != doubled)
    throw DomainError("exponent must be an integer or half-integer");
  if (a.is_zero()) {
    if (r <= 0.0) throw DomainError("zero element requires a positive exponent");
    return Scalar::zero();
  }
  if (r == 0.0) return Scalar::one();
  return Scalar(r * a.value());
}

/// Square root in the semifield: halves the value.
inline Scalar sqrt(Scalar a) { return power(a, 0.5); }

/// Approximate equality: exact for bottom elements, absolute tolerance
/// for finite values.
constexpr bool near(Scalar a, Scalar b, double tol = kDefaultTol) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const double d = a.value() - b.value();
  return (d < 0 ? -d : d) <= tol;
}

}  // namespace tropo
