#pragma once

// Shared generators and conventional-arithmetic references for the test
// suites.  Everything here is deterministic: pass an explicitly seeded
// engine.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "tropolocate/matrix.hpp"
#include "tropolocate/vector.hpp"

namespace testsupport {

using tropo::Matrix;
using tropo::Orient;
using tropo::Scalar;
using tropo::Vector;

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline double uniform(std::mt19937& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(std::mt19937& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Half-integers add exactly in doubles, so semiring laws can be checked
// with == rather than a tolerance.
inline double half_integer(std::mt19937& g, int lo2, int hi2) {
  return uniform_int(g, lo2, hi2) / 2.0;
}

inline Vector regular_vector(std::mt19937& g, std::size_t n, double lo = -10, double hi = 10,
                             Orient orient = Orient::column) {
  std::vector<Scalar> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(uniform(g, lo, hi));
  return Vector(std::move(e), orient);
}

// Random matrix with optional bottom holes but never an all-bottom row.
inline Matrix regular_matrix(std::mt19937& g, std::size_t m, std::size_t n,
                             double hole_prob = 0.0, double lo = -10, double hi = 10) {
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    bool has_finite = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (uniform(g, 0, 1) >= hole_prob) {
        a(i, j) = Scalar(uniform(g, lo, hi));
        has_finite = true;
      }
    }
    if (!has_finite) a(i, uniform_int(g, 0, int(n) - 1)) = Scalar(uniform(g, lo, hi));
  }
  return a;
}

// Strong connectivity guaranteed by a finite cycle 0 -> 1 -> ... -> 0;
// extra finite entries appear with the given probability.
inline Matrix irreducible_matrix(std::mt19937& g, std::size_t n, double extra_prob = 0.5,
                                 double lo = -6, double hi = 6) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, (i + 1) % n) = Scalar(uniform(g, lo, hi));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_zero() && uniform(g, 0, 1) < extra_prob)
        a(i, j) = Scalar(uniform(g, lo, hi));
  return a;
}

// Maximum cycle mean over cycles of length up to n, via traces of powers.
inline double max_cycle_mean(const Matrix& a) {
  double best = -std::numeric_limits<double>::infinity();
  Matrix p = a;
  for (std::size_t len = 1; len <= a.rows(); ++len) {
    if (len > 1) p = otimes(p, a);
    const Scalar t = trace(p);
    if (t.is_finite()) best = std::max(best, t.value() / double(len));
  }
  return best;
}

// Subtract the max cycle mean from every finite entry: the result has
// unit trace closure (critical cycles land exactly on the identity).
inline Matrix shift_to_unit_closure(const Matrix& a) {
  const double mu = max_cycle_mean(a);
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) out(i, j) = Scalar(a(i, j).value() - mu);
  return out;
}

// As above plus a further downward shift, giving trace closure <= one.
inline Matrix shift_below_unit_closure(std::mt19937& g, const Matrix& a) {
  const double mu = max_cycle_mean(a) + uniform(g, 0.0, 2.0);
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) out(i, j) = Scalar(a(i, j).value() - mu);
  return out;
}

// Conventional references, independent of the tropical operations.

inline double conv_chebyshev(const Vector& x, const Vector& y) {
  double best = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    best = std::max(best, std::abs(x[i].value() - y[i].value()));
  return best;
}

// max_j over finite entries of row i of (a_ij + x_j); -inf if none.
inline double conv_row_image(const Matrix& a, std::size_t i, const std::vector<double>& x) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(i, j).is_finite()) best = std::max(best, a(i, j).value() + x[j]);
  return best;
}

// Objective of the two-sided problem (Ax)^-b (+) c^-Ax, evaluated with
// plain double arithmetic.
inline double conv_two_sided(const Matrix& a, const std::vector<double>& b,
                             const std::vector<double>& c, const std::vector<double>& x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double ax = conv_row_image(a, i, x);
    worst = std::max(worst, b[i] - ax);
    worst = std::max(worst, ax - c[i]);
  }
  return worst;
}

inline std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (Scalar e : v) out.push_back(e.value());
  return out;
}

}  // namespace testsupport
