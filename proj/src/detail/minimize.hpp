#pragma once

#include <cmath>
#include <limits>

namespace blaschke::detail {

/// Minimum of f on the open interval (lo, hi): a 4096-point scan followed by
/// golden-section refinement around the best sample. f may return +inf or
/// nan where it is undefined; those samples are skipped.
template <class F>
double minimize_scan(F&& f, double lo, double hi) {
  constexpr int kGrid = 4096;
  const double h = (hi - lo) / kGrid;
  int best = 1;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kGrid; ++i) {
    const double v = f(lo + h * i);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }

  const double phi = 0.5 * (std::sqrt(5.0) - 1);
  double a = lo + h * (best - 1);
  double b = lo + h * (best + 1);
  if (best == 1) a = lo + 0.5 * h / kGrid;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 100 && b - a > 1e-15 * (hi - lo); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  double result = best_val;
  if (fc < result) result = fc;
  if (fd < result) result = fd;
  return result;
}

}  // namespace blaschke::detail
