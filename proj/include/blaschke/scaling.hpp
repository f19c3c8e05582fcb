#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "blaschke/rational.hpp"

namespace blaschke {

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  /// sqrt(SSR/(m-2) / Σ(x - x̄)²)
  double slope_stderr = 0;
  double residual_ss = 0;
};

/// Ordinary least squares through (x, y) pairs. Needs at least 4 points;
/// throws DegenerateFit when all abscissae coincide.
LinearFit fit_exponent(const std::vector<std::pair<double, double>>& points);

/// Exponent of n in ‖B‖_p: (2-p)/(2p) for p < 4, (1-p)/(3p) for p > 4,
/// -1/3 for p = ∞. For p = 4 the fit is against (1/4)log(log n/n) and the
/// expected slope is 1.
mpq_class theory_slope(const Exponent& p);

struct ScalingFit {
  mpq_class lambda;
  Exponent p = Exponent::infinity();
  std::vector<long> n_grid;
  std::vector<double> norms;
  /// Regressor per grid point: log n, or (1/4)log(log n/n) for p = 4.
  std::vector<double> abscissae;
  double fitted_slope = 0;
  double slope_stderr = 0;
  mpq_class theory_slope;
  bool log_corrected = false;
  /// Relative difference between FFT and exact norms at the smallest n.
  double spot_check = 0;
  std::vector<std::string> warnings;
};

/// Throws DomainError unless the grid is strictly increasing with ratio 2,
/// has at least 4 points and starts at n ≥ 64.
void validate_scaling_grid(const std::vector<long>& n_grid);

/// n_first, 2n_first, ..., up to n_last.
std::vector<long> geometric_grid(long n_first, long n_last);

/// ‖B‖_p over the grid (FFT engine, exact check at the smallest n) and the
/// log-log slope.
ScalingFit run_norm_scaling(const mpq_class& lambda, const Exponent& p, const std::vector<long>& n_grid);

/// ‖B‖₄⁴·n/log n per grid point.
std::vector<double> p4_ratio_scan(const mpq_class& lambda, const std::vector<long>& n_grid);

/// Residual sums of squares of log‖B‖₄ against two one-parameter models with
/// fixed shape: c + (1/4)log(log n/n) and c - (1/4)log n.
struct P4ModelComparison {
  double log_corrected_ssr = 0;
  double power_law_ssr = 0;
};

P4ModelComparison p4_model_comparison(const mpq_class& lambda, const std::vector<long>& n_grid);

}  // namespace blaschke
