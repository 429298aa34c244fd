#pragma once

// Brute-force verification oracle.  All arithmetic in this module is
// conventional double arithmetic on raw coordinate values; it must not
// call any of the tropical operations it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tropolocate/location.hpp"

namespace tropo::oracle {

struct OracleConfig {
  std::vector<double> lower;
  std::vector<double> upper;
  double step;
  double feas_tol;
};

inline constexpr std::uint64_t kMaxGridNodes = 10'000'000;

/// Bounds cover the sites' bounding box inflated by the weight range
/// plus the largest coordinate spread, which also covers constrained
/// optima lying outside the hull of the sites.
inline OracleConfig default_config(const LocationProblem& problem,
                                   std::optional<double> step = std::nullopt) {
  const std::size_t n = problem.dimension();
  std::vector<double> lo(n, std::numeric_limits<double>::max());
  std::vector<double> hi(n, std::numeric_limits<double>::lowest());
  for (std::size_t i = 0; i < problem.site_count(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = std::min(lo[k], problem.point(i)[k].value());
      hi[k] = std::max(hi[k], problem.point(i)[k].value());
    }
  double wmin = problem.weight(0), wmax = problem.weight(0);
  for (std::size_t i = 1; i < problem.site_count(); ++i) {
    wmin = std::min(wmin, problem.weight(i));
    wmax = std::max(wmax, problem.weight(i));
  }
  double spread = 0;
  for (std::size_t k = 0; k < n; ++k) spread = std::max(spread, hi[k] - lo[k]);
  const double pad = (wmax - wmin) + spread;
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] -= pad;
    hi[k] += pad;
  }
  const double chosen = step ? *step : (n <= 2 ? 0.05 : 0.2);
  return OracleConfig{std::move(lo), std::move(hi), chosen, chosen};
}

/// max over sites of (Chebyshev(r_i, x) + w_i), plain doubles only.
inline double objective(const LocationProblem& problem, const std::vector<double>& x) {
  if (x.size() != problem.dimension()) throw DimensionMismatch("point dimension mismatch");
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < problem.site_count(); ++i) {
    double dist = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
      dist = std::max(dist, std::abs(problem.point(i)[k].value() - x[k]));
    worst = std::max(worst, dist + problem.weight(i));
  }
  return worst;
}

namespace detail {

inline bool feasible(const LocationProblem& problem, const std::vector<double>& x,
                     double feas_tol) {
  if (problem.kind() == ConstraintKind::none) return true;
  const Matrix& a = problem.constraint();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double image = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) image = std::max(image, a(i, j).value() + x[j]);
    if (problem.kind() == ConstraintKind::equality) {
      if (!(std::abs(image - x[i]) <= feas_tol)) return false;
    } else {
      if (!(image <= x[i] + feas_tol)) return false;
    }
  }
  return true;
}

}  // namespace detail

struct GridResult {
  double value;
  std::vector<double> argmin;
};

/// Exhaustive scan of the grid, skipping nodes that fail the constraint
/// filter.  Nodes are visited in lexicographic order and ties keep the
/// first node, so the result is deterministic.
inline GridResult grid_minimize(const LocationProblem& problem, const OracleConfig& cfg) {
  const std::size_t n = problem.dimension();
  if (cfg.lower.size() != n || cfg.upper.size() != n)
    throw DimensionMismatch("grid bounds dimension mismatch");
  if (!(cfg.step > 0)) throw DomainError("grid step must be positive");
  if (!(cfg.feas_tol > 0)) throw DomainError("feasibility tolerance must be positive");

  std::vector<std::size_t> counts(n);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(cfg.lower[k] < cfg.upper[k]))
      throw DomainError("grid bounds must satisfy lower < upper");
    counts[k] = std::size_t((cfg.upper[k] - cfg.lower[k]) / cfg.step + 1e-9) + 1;
    if (counts[k] > kMaxGridNodes) throw GridTooLarge("grid node cap exceeded");
    total *= counts[k];
    if (total > kMaxGridNodes) throw GridTooLarge("grid node cap exceeded");
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  for (std::uint64_t node = 0; node < total; ++node) {
    for (std::size_t k = 0; k < n; ++k) x[k] = cfg.lower[k] + double(idx[k]) * cfg.step;
    if (detail::feasible(problem, x, cfg.feas_tol)) {
      const double value = objective(problem, x);
      if (value < best) {
        best = value;
        best_x = x;
      }
    }
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < counts[k]) break;
      idx[k] = 0;
    }
  }
  if (best_x.empty()) throw NoFeasibleNode("no grid node satisfies the constraints");
  return GridResult{best, std::move(best_x)};
}

}  // namespace tropo::oracle
