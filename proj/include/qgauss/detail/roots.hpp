#pragma once

#include <cmath>

namespace qgauss::detail {

// Bisection width shared by every monotone inversion in the library.
inline constexpr double kBracketWidth = 1e-13;

/// Solves increasing(x) = target on [lo, hi] by bisection down to a bracket
/// of width `width`, then tries one Newton step with `slope`; the step is kept
/// only if it stays inside the final bracket and lowers the residual.
template <class Fn, class Slope>
double invert_increasing(Fn&& increasing, Slope&& slope, double target,
                         double lo, double hi,
                         double width = kBracketWidth) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (increasing(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  const double residual = increasing(x) - target;
  const double d = slope(x);
  if (d > 0.0 && std::isfinite(d)) {
    const double polished = x - residual / d;
    if (polished >= lo && polished <= hi &&
        std::abs(increasing(polished) - target) < std::abs(residual)) {
      return polished;
    }
  }
  return x;
}

}  // namespace qgauss::detail
