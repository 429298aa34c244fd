#pragma once

#include "tropolocate/matrix.hpp"

namespace tropo {

/// Minimum of (Ax)^-b (+) c^-Ax over regular x, with one witness
/// minimizer and the necessary image bounds delta^-1 b <= Ax <= delta c
/// that every minimizer satisfies.
struct TwoSidedResult {
  Scalar delta;
  Vector minimizer;
  Vector image_lower;
  Vector image_upper;
};

inline TwoSidedResult minimize_two_sided(const Matrix& a, const Vector& b, const Vector& c) {
  if (!a.is_regular()) throw NotRegular("matrix must have no all-bottom rows");
  if (!b.is_regular() || !c.is_regular()) throw NotRegular("bounds must be regular vectors");
  if (b.orient() != Orient::column || c.orient() != Orient::column ||
      b.size() != a.rows() || c.size() != a.rows())
    throw DimensionMismatch("bounds must be columns of length matching the row count");

  const Vector base = pseudo_inverse(otimes(pseudo_inverse(c), a));  // (c^-A)^-
  const Scalar delta = sqrt(otimes(pseudo_inverse(otimes(a, base)), b));
  return TwoSidedResult{delta, otimes(delta, base), otimes(inv(delta), b), otimes(delta, c)};
}

/// Necessary condition for x to minimize the two-sided objective: its
/// image A x lies inside [image_lower, image_upper].
inline bool minimizer_box(const TwoSidedResult& result, const Vector& x, const Matrix& a,
                          double tol = kDefaultTol) {
  const Vector image = otimes(a, x);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i].value() < result.image_lower[i].value() - tol) return false;
    if (image[i].value() > result.image_upper[i].value() + tol) return false;
  }
  return true;
}

/// Identity-matrix case: the minimum delta = (c^-b)^{1/2} of
/// x^-b (+) c^-x is attained at every x in [delta^-1 b, delta c].
struct IdentityBoxResult {
  Scalar delta;
  Vector lower;
  Vector upper;
};

inline IdentityBoxResult minimize_identity(const Vector& b, const Vector& c) {
  if (!b.is_regular() || !c.is_regular()) throw NotRegular("bounds must be regular vectors");
  if (b.orient() != Orient::column || c.orient() != Orient::column || b.size() != c.size())
    throw DimensionMismatch("bounds must be columns of equal length");
  const Scalar delta = sqrt(otimes(pseudo_inverse(c), b));
  return IdentityBoxResult{delta, otimes(inv(delta), b), otimes(delta, c)};
}

}  // namespace tropo
