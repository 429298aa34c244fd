#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tropolocate/scalar.hpp"

namespace tropo {

/// Orientation is a semantic tag carried by every vector; mixing
/// orientations in a product is a dimension error, not a silent
/// transpose.
enum class Orient { column, row };

/// Dense vector over the max-plus semifield, length fixed at
/// construction (at least 1).
class Vector {
 public:
  explicit Vector(std::vector<Scalar> entries, Orient orient = Orient::column)
      : entries_(std::move(entries)), orient_(orient) {
    if (entries_.empty()) throw DimensionMismatch("vector must have at least one entry");
  }

  static Vector column(std::initializer_list<double> xs) {
    return Vector(std::vector<Scalar>(xs.begin(), xs.end()), Orient::column);
  }
  static Vector row(std::initializer_list<double> xs) {
    return Vector(std::vector<Scalar>(xs.begin(), xs.end()), Orient::row);
  }
  /// All-bottom vector of the given length.
  static Vector zeros(std::size_t n, Orient orient = Orient::column) {
    return Vector(std::vector<Scalar>(n, Scalar::zero()), orient);
  }

  std::size_t size() const { return entries_.size(); }
  Orient orient() const { return orient_; }

  Scalar operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// No bottom entries.
  bool is_regular() const {
    for (Scalar e : entries_)
      if (e.is_zero()) return false;
    return true;
  }

  /// All entries bottom.
  bool is_zero() const {
    for (Scalar e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
  Orient orient_;
};

inline void require_same_shape(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.orient() != y.orient())
    throw DimensionMismatch("vectors must have equal length and orientation");
}

/// Componentwise max.
inline Vector oplus(const Vector& x, const Vector& y) {
  require_same_shape(x, y);
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(oplus(x[i], y[i]));
  return Vector(std::move(out), x.orient());
}

/// Componentwise scalar multiplication.
inline Vector otimes(Scalar c, const Vector& x) {
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (Scalar e : x) out.push_back(otimes(c, e));
  return Vector(std::move(out), x.orient());
}

/// Inner product row * column, the max of entrywise sums.
inline Scalar otimes(const Vector& x, const Vector& y) {
  if (x.orient() != Orient::row || y.orient() != Orient::column)
    throw DimensionMismatch("inner product needs row * column");
  if (x.size() != y.size()) throw DimensionMismatch("inner product length mismatch");
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = oplus(acc, otimes(x[i], y[i]));
  return acc;
}

/// Entrywise inverse with bottom entries kept; flips the orientation, so
/// the pseudo-inverse of a column is a row co-vector.
inline Vector pseudo_inverse(const Vector& x) {
  if (x.is_zero()) throw ZeroVector("pseudo-inverse of the zero vector");
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (Scalar e : x) out.push_back(inv(e));
  return Vector(std::move(out), x.orient() == Orient::column ? Orient::row : Orient::column);
}

/// Metric y^-x (+) x^-y; coincides with the Chebyshev distance on
/// regular vectors.
inline Scalar metric_rho(const Vector& x, const Vector& y) {
  require_same_shape(x, y);
  if (!x.is_regular() || !y.is_regular())
    throw NotRegular("metric requires regular vectors");
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = oplus(acc, otimes(inv(y[i]), x[i]));
    acc = oplus(acc, otimes(inv(x[i]), y[i]));
  }
  return acc;
}

inline bool near(const Vector& x, const Vector& y, double tol = kDefaultTol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!near(x[i], y[i], tol)) return false;
  return true;
}

}  // namespace tropo
