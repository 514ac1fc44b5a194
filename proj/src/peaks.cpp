#include "latticepol/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latticepol {
namespace {

// Vertex of the parabola through three points; falls back to the middle
// sample when the points are collinear.
Peak refine(double x0, double y0, double x1, double y1, double x2, double y2) {
  const double d0 = x1 - x0;
  const double d2 = x1 - x2;
  const double num = d0 * d0 * (y1 - y2) - d2 * d2 * (y1 - y0);
  const double den = d0 * (y1 - y2) - d2 * (y1 - y0);
  if (den == 0.0) return {x1, y1, 0.0};
  double xv = x1 - 0.5 * num / den;
  xv = std::clamp(xv, x0, x2);
  // Lagrange evaluation at the vertex.
  const double l0 = (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1));
  return {xv, std::max(y1, y0 * l0 + y1 * l1 + y2 * l2), 0.0};
}

double crossing(double xa, double ya, double xb, double yb, double level) {
  if (yb == ya) return 0.5 * (xa + xb);
  return xa + (level - ya) * (xb - xa) / (yb - ya);
}

}  // namespace

std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double rel_threshold) {
  const std::size_t n = std::min(x.size(), y.size());
  std::vector<Peak> peaks;
  if (n < 3) throw NoPeaksFound("no peaks found: fewer than three samples");
  const double top = *std::max_element(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    if (y[i] < rel_threshold * top) continue;
    Peak p = refine(x[i - 1], y[i - 1], x[i], y[i], x[i + 1], y[i + 1]);
    const double half = 0.5 * p.height;

    double left = nan;
    for (std::size_t j = i; j-- > 0;) {
      if (y[j] <= half) {
        left = crossing(x[j], y[j], x[j + 1], y[j + 1], half);
        break;
      }
    }
    double right = nan;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (y[j] <= half) {
        right = crossing(x[j - 1], y[j - 1], x[j], y[j], half);
        break;
      }
    }
    p.fwhm = right - left;
    peaks.push_back(p);
  }
  if (peaks.empty()) throw NoPeaksFound("no peaks found: spectrum has no interior maximum");
  return peaks;
}

}  // namespace latticepol
