#pragma once

#include <optional>

#include "tropolocate/matrix.hpp"

namespace tropo {

/// Outcome of solving A x = d over regular inputs.  The residual delta
/// is the least achievable distance between A x and d; the equation is
/// solvable exactly when delta is the identity, and best_x is then the
/// maximum solution.  Otherwise best_x is the distance minimizer
/// delta * (d^-A)^-.
struct FirstKindResult {
  Scalar delta;
  Vector best_x;
  bool solvable;
};

namespace detail {

inline void require_first_kind_input(const Matrix& a, const Vector& d) {
  if (!a.is_regular()) throw NotRegular("matrix must have no all-bottom rows");
  if (!d.is_regular()) throw NotRegular("right-hand side must be regular");
  if (d.orient() != Orient::column || d.size() != a.rows())
    throw DimensionMismatch("right-hand side must be a column of matching length");
}

}  // namespace detail

/// Least distance from d to the column span of A: sqrt((A(d^-A)^-)^- d).
inline Scalar first_kind_residual(const Matrix& a, const Vector& d) {
  detail::require_first_kind_input(a, d);
  const Vector base = pseudo_inverse(otimes(pseudo_inverse(d), a));
  const Scalar delta_sq = otimes(pseudo_inverse(otimes(a, base)), d);
  return sqrt(delta_sq);
}

inline FirstKindResult solve_first_kind(const Matrix& a, const Vector& d,
                                        double tol = kDefaultTol) {
  detail::require_first_kind_input(a, d);
  const Vector base = pseudo_inverse(otimes(pseudo_inverse(d), a));
  const Scalar delta = sqrt(otimes(pseudo_inverse(otimes(a, base)), d));
  return FirstKindResult{delta, otimes(delta, base), near(delta, Scalar::one(), tol)};
}

/// Solution family of A x = x or A x <= x for an irreducible matrix.
/// When the trace-closure premise holds, every solution is generator * v;
/// otherwise only the trivial all-bottom solution exists and generator
/// is absent.
struct SecondKindResult {
  std::optional<Matrix> generator;
  bool trivial_only;
};

inline SecondKindResult solve_second_kind_eq(const Matrix& a, double tol = kDefaultTol) {
  if (!is_irreducible(a)) throw NotIrreducible("equation solver requires an irreducible matrix");
  if (!near(tr_closure(a), Scalar::one(), tol)) return SecondKindResult{std::nullopt, true};
  return SecondKindResult{plus_matrix(a, tol), false};
}

inline SecondKindResult solve_second_kind_ineq(const Matrix& a, double tol = kDefaultTol) {
  if (!is_irreducible(a)) throw NotIrreducible("inequality solver requires an irreducible matrix");
  if (tr_closure(a) > Scalar(tol)) return SecondKindResult{std::nullopt, true};
  return SecondKindResult{star(a), false};
}

}  // namespace tropo
