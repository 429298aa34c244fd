#pragma once

// Deterministic 2-D SVG rendering of a location problem and its
// solution: sites, the [q, p] rectangle, 45-degree guide lines through
// its corners, the unconstrained solution box (a thick segment in the
// generic case), constraint boundary lines, and the witness location.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropolocate/location.hpp"

namespace tropo::svg {

inline constexpr double kCanvas = 800.0;
inline constexpr double kMargin = 70.0;

/// Affine data-to-canvas map with uniform scale and flipped y axis.
struct PlotTransform {
  double scale;
  double x0, y0;      // data-space origin of the drawable area
  double span;        // data-space side length of the (square) viewport
  double x(double dx) const { return kMargin + (dx - x0) * scale; }
  double y(double dy) const { return kCanvas - kMargin - (dy - y0) * scale; }
};

namespace detail {

inline std::string num(double v) {
  // Round before formatting so values near zero never print as "-0.00".
  double r = std::round(v * 100.0) / 100.0;
  if (r == 0.0) r = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

struct Extent {
  double lo_x, hi_x, lo_y, hi_y;
  void add(double x, double y) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
};

}  // namespace detail

inline PlotTransform make_transform(const SolutionReport& report,
                                    const LocationProblem& problem) {
  detail::Extent e{problem.point(0)[0].value(), problem.point(0)[0].value(),
                   problem.point(0)[1].value(), problem.point(0)[1].value()};
  for (std::size_t i = 0; i < problem.site_count(); ++i)
    e.add(problem.point(i)[0].value(), problem.point(i)[1].value());
  e.add(report.p[0].value(), report.p[1].value());
  e.add(report.q[0].value(), report.q[1].value());
  e.add(report.witness[0].value(), report.witness[1].value());
  if (report.box_lower) e.add((*report.box_lower)[0].value(), (*report.box_lower)[1].value());
  if (report.box_upper) e.add((*report.box_upper)[0].value(), (*report.box_upper)[1].value());

  const double pad = 1.0 + 0.05 * std::max(e.hi_x - e.lo_x, e.hi_y - e.lo_y);
  const double span = std::max(e.hi_x - e.lo_x, e.hi_y - e.lo_y) + 2 * pad;
  const double scale = (kCanvas - 2 * kMargin) / span;
  // Center the content inside the square viewport.
  const double cx = (e.lo_x + e.hi_x) / 2, cy = (e.lo_y + e.hi_y) / 2;
  return PlotTransform{scale, cx - span / 2, cy - span / 2, span};
}

namespace detail {

inline void line(std::ostringstream& out, const PlotTransform& t, double x1, double y1,
                 double x2, double y2, const char* cls) {
  out << "  <line class=\"" << cls << "\" x1=\"" << num(t.x(x1)) << "\" y1=\"" << num(t.y(y1))
      << "\" x2=\"" << num(t.x(x2)) << "\" y2=\"" << num(t.y(y2)) << "\"/>\n";
}

// Slope-one line y = x + c clipped to the data viewport.
inline void diagonal_line(std::ostringstream& out, const PlotTransform& t, double c,
                          const char* cls) {
  const double lo = std::max(t.x0, t.y0 - c);
  const double hi = std::min(t.x0 + t.span, t.y0 + t.span - c);
  if (lo >= hi) return;
  line(out, t, lo, lo + c, hi, hi + c, cls);
}

inline void dot(std::ostringstream& out, const PlotTransform& t, double x, double y,
                double r, const char* cls) {
  out << "  <circle class=\"" << cls << "\" cx=\"" << num(t.x(x)) << "\" cy=\"" << num(t.y(y))
      << "\" r=\"" << num(r) << "\"/>\n";
}

}  // namespace detail

inline std::string render(const LocationProblem& problem, const SolutionReport& report) {
  if (problem.dimension() != 2)
    throw DimensionUnsupported("plotting supports two-dimensional problems only");

  const PlotTransform t = make_transform(report, problem);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "  <style>\n"
      << "    .frame { fill: white; stroke: #444; }\n"
      << "    .hull { fill: none; stroke: #888; }\n"
      << "    .guide { stroke: #bbb; stroke-dasharray: 6 4; }\n"
      << "    .constraint { stroke: #c33; stroke-width: 1.5; }\n"
      << "    .solution { stroke: #06c; stroke-width: 5; fill: none; }\n"
      << "    .site { fill: #222; }\n"
      << "    .witness { fill: #06c; }\n"
      << "  </style>\n";
  out << "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"800\" height=\"800\"/>\n";

  // Enclosing [q, p] rectangle and its corner guides.
  const double qx = report.q[0].value(), qy = report.q[1].value();
  const double px = report.p[0].value(), py = report.p[1].value();
  const double rx0 = std::min(qx, px), rx1 = std::max(qx, px);
  const double ry0 = std::min(qy, py), ry1 = std::max(qy, py);
  out << "  <rect class=\"hull\" x=\"" << detail::num(t.x(rx0)) << "\" y=\""
      << detail::num(t.y(ry1)) << "\" width=\"" << detail::num((rx1 - rx0) * t.scale)
      << "\" height=\"" << detail::num((ry1 - ry0) * t.scale) << "\"/>\n";
  detail::diagonal_line(out, t, qy - qx, "guide");
  detail::diagonal_line(out, t, py - px, "guide");

  // Constraint boundaries: one slope-one line per finite off-diagonal entry.
  if (problem.kind() != ConstraintKind::none) {
    const Matrix& a = problem.constraint();
    if (a(0, 1).is_finite()) detail::diagonal_line(out, t, -a(0, 1).value(), "constraint");
    if (a(1, 0).is_finite()) detail::diagonal_line(out, t, a(1, 0).value(), "constraint");
  }

  // Unconstrained solution box (degenerates to a segment or a point).
  const IdentityBoxResult relaxed = minimize_identity(report.p, report.q);
  const double bl_x = relaxed.lower[0].value(), bl_y = relaxed.lower[1].value();
  const double bu_x = relaxed.upper[0].value(), bu_y = relaxed.upper[1].value();
  detail::line(out, t, bl_x, bl_y, bu_x, bu_y, "solution");

  for (std::size_t i = 0; i < problem.site_count(); ++i)
    detail::dot(out, t, problem.point(i)[0].value(), problem.point(i)[1].value(), 5, "site");
  detail::dot(out, t, report.witness[0].value(), report.witness[1].value(), 7, "witness");

  out << "</svg>\n";
  return out.str();
}

}  // namespace tropo::svg
