#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "tropolocate/minimax.hpp"
#include "tropolocate/solve_linear.hpp"

namespace tropo {

enum class ConstraintKind { none, equality, inequality };

/// Minimax single-facility problem: sites r_1..r_m in R^n, addend
/// weights w_1..w_m, and an optional feasible region given by a square
/// constraint matrix (A x = x or A x <= x).
class LocationProblem {
 public:
  LocationProblem(std::vector<Vector> points, std::vector<double> weights)
      : LocationProblem(std::move(points), std::move(weights), ConstraintKind::none,
                        std::nullopt) {}

  LocationProblem(std::vector<Vector> points, std::vector<double> weights, ConstraintKind kind,
                  std::optional<Matrix> constraint)
      : points_(std::move(points)), weights_(std::move(weights)), kind_(kind),
        constraint_(std::move(constraint)) {
    if (points_.empty()) throw DimensionMismatch("need at least one site");
    const std::size_t n = points_.front().size();
    for (const Vector& r : points_) {
      if (r.size() != n || r.orient() != Orient::column)
        throw DimensionMismatch("sites must be columns of equal length");
      if (!r.is_regular()) throw NotRegular("site coordinates must be finite");
    }
    if (weights_.empty()) weights_.assign(points_.size(), 0.0);
    if (weights_.size() != points_.size())
      throw DimensionMismatch("need one weight per site");
    for (double w : weights_)
      if (!std::isfinite(w)) throw DomainError("weights must be finite");
    if ((kind_ == ConstraintKind::none) == constraint_.has_value())
      throw DomainError("constraint matrix must be present exactly for constrained kinds");
    if (constraint_ && (!constraint_->is_square() || constraint_->rows() != n))
      throw DimensionMismatch("constraint matrix must be square of the site dimension");
  }

  std::size_t site_count() const { return points_.size(); }
  std::size_t dimension() const { return points_.front().size(); }
  const Vector& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  ConstraintKind kind() const { return kind_; }
  const Matrix& constraint() const { return *constraint_; }

 private:
  std::vector<Vector> points_;
  std::vector<double> weights_;
  ConstraintKind kind_;
  std::optional<Matrix> constraint_;
};

/// Optimal value and witness location.  The full solution box is
/// reported for the unconstrained case only; the constrained solvers
/// return the single witness their closed forms produce.
struct SolutionReport {
  double delta;
  Vector witness;
  std::optional<Vector> box_lower;
  std::optional<Vector> box_upper;
  Vector p;
  Vector q;
  ConstraintKind kind;
};

/// Aggregates p = (+) w_i r_i and q^- = (+) w_i r_i^-, i.e.
/// p_k = max_i (r_ki + w_i) and q_k = min_i (r_ki - w_i).
inline std::pair<Vector, Vector> derive_pq(const LocationProblem& problem) {
  Vector p = Vector::zeros(problem.dimension());
  Vector q_inv = Vector::zeros(problem.dimension(), Orient::row);
  for (std::size_t i = 0; i < problem.site_count(); ++i) {
    const Scalar w(problem.weight(i));
    p = oplus(p, otimes(w, problem.point(i)));
    q_inv = oplus(q_inv, otimes(w, pseudo_inverse(problem.point(i))));
  }
  return {p, pseudo_inverse(q_inv)};
}

inline SolutionReport solve_unconstrained(const LocationProblem& problem) {
  if (problem.kind() != ConstraintKind::none)
    throw DomainError("problem carries a constraint");
  const auto [p, q] = derive_pq(problem);
  const IdentityBoxResult box = minimize_identity(p, q);
  return SolutionReport{box.delta.value(), box.lower, box.lower, box.upper,
                        p, q, ConstraintKind::none};
}

namespace detail {

inline SolutionReport solve_with_generator(const LocationProblem& problem,
                                           const Matrix& generator) {
  const auto [p, q] = derive_pq(problem);
  const TwoSidedResult two = minimize_two_sided(generator, p, q);
  return SolutionReport{two.delta.value(), otimes(generator, two.minimizer),
                        std::nullopt, std::nullopt, p, q, problem.kind()};
}

}  // namespace detail

inline SolutionReport solve_equality_constrained(const LocationProblem& problem,
                                                 double tol = kDefaultTol) {
  if (problem.kind() != ConstraintKind::equality)
    throw DomainError("problem does not carry an equality constraint");
  const Matrix& a = problem.constraint();
  if (!is_irreducible(a))
    throw NotIrreducible("equality constraint matrix must be irreducible");
  if (!near(tr_closure(a), Scalar::one(), tol))
    throw PremiseViolation(
        "equality constraint needs unit trace closure; otherwise only the trivial "
        "all-bottom solution satisfies A x = x and no regular location is feasible");
  return detail::solve_with_generator(problem, plus_matrix(a, tol));
}

inline SolutionReport solve_inequality_constrained(const LocationProblem& problem,
                                                   double tol = kDefaultTol) {
  if (problem.kind() != ConstraintKind::inequality)
    throw DomainError("problem does not carry an inequality constraint");
  const Matrix& a = problem.constraint();
  if (!is_irreducible(a))
    throw NotIrreducible("inequality constraint matrix must be irreducible");
  if (tr_closure(a) > Scalar(tol))
    throw PremiseViolation(
        "inequality constraint needs trace closure at most one; otherwise only the "
        "trivial all-bottom solution satisfies A x <= x and no regular location is feasible");
  return detail::solve_with_generator(problem, star(a));
}

inline SolutionReport solve(const LocationProblem& problem, double tol = kDefaultTol) {
  switch (problem.kind()) {
    case ConstraintKind::none:
      return solve_unconstrained(problem);
    case ConstraintKind::equality:
      return solve_equality_constrained(problem, tol);
    case ConstraintKind::inequality:
      return solve_inequality_constrained(problem, tol);
  }
  throw DomainError("unknown constraint kind");
}

}  // namespace tropo
