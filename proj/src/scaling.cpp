#include "blaschke/scaling.hpp"

#include <cmath>
#include <sstream>

#include "blaschke/engines.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/norms.hpp"

namespace blaschke {

LinearFit fit_exponent(const std::vector<std::pair<double, double>>& points) {
  const auto m = points.size();
  if (m < 4) throw DomainError("fit_exponent needs at least 4 points, got " + std::to_string(m));
  double mx = 0, my = 0;
  for (auto [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw DegenerateFit("all abscissae are equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (auto [x, y] : points) {
    const double r = y - (f.intercept + f.slope * x);
    f.residual_ss += r * r;
  }
  f.slope_stderr = std::sqrt(f.residual_ss / static_cast<double>(m - 2) / sxx);
  return f;
}

mpq_class theory_slope(const Exponent& p) {
  if (p.is_infinite()) return mpq_class(-1, 3);
  const mpq_class& q = p.exact();
  mpq_class s;
  if (q < 4)
    s = (2 - q) / (2 * q);
  else if (q > 4)
    s = (1 - q) / (3 * q);
  else
    s = 1;
  s.canonicalize();
  return s;
}

void validate_scaling_grid(const std::vector<long>& n_grid) {
  if (n_grid.size() < 4) throw DomainError("scaling grid needs at least 4 points");
  if (n_grid.front() < 64) throw DomainError("scaling grid must start at n >= 64");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] != 2 * n_grid[i - 1]) throw DomainError("scaling grid must be geometric with ratio 2");
}

std::vector<long> geometric_grid(long n_first, long n_last) {
  if (n_first < 1 || n_last < n_first) throw DomainError("invalid grid bounds");
  std::vector<long> g;
  for (long n = n_first; n <= n_last; n *= 2) g.push_back(n);
  return g;
}

namespace {

double fft_norm(const mpq_class& lambda, long n, const Exponent& p) {
  const auto params = make_params(lambda, n);
  return lp_norm(coeff_series_fft(params, default_kmax(params)), p).value;
}

double exact_norm(const mpq_class& lambda, long n, const Exponent& p) {
  const auto params = make_params(lambda, n);
  return lp_norm(coeff_series_exact(params, default_kmax(params)), p).value;
}

constexpr double kSpotTolerance = 1e-9;

}  // namespace

ScalingFit run_norm_scaling(const mpq_class& lambda, const Exponent& p, const std::vector<long>& n_grid) {
  validate_scaling_grid(n_grid);
  ScalingFit fit;
  fit.lambda = lambda;
  fit.p = p;
  fit.n_grid = n_grid;
  fit.theory_slope = theory_slope(p);
  fit.log_corrected = !p.is_infinite() && p.exact() == 4;
  if (!p.is_infinite() && !fit.log_corrected && std::fabs(p.to_double() - 4) < 0.05)
    fit.warnings.push_back("p=" + p.str() + " is within 0.05 of 4; the power law converges slowly here");

  std::vector<std::pair<double, double>> points;
  for (long n : n_grid) {
    const double norm = fft_norm(lambda, n, p);
    const double ln = std::log(static_cast<double>(n));
    const double x = fit.log_corrected ? 0.25 * std::log(ln / static_cast<double>(n)) : ln;
    fit.norms.push_back(norm);
    fit.abscissae.push_back(x);
    points.emplace_back(x, std::log(norm));
  }

  const double exact = exact_norm(lambda, n_grid.front(), p);
  fit.spot_check = std::fabs(fit.norms.front() - exact) / exact;
  if (fit.spot_check > kSpotTolerance) {
    std::ostringstream msg;
    msg << "FFT norm at n=" << n_grid.front() << " differs from the exact norm by " << fit.spot_check;
    throw NonConvergence(msg.str());
  }

  const LinearFit f = fit_exponent(points);
  fit.fitted_slope = f.slope;
  fit.slope_stderr = f.slope_stderr;
  return fit;
}

std::vector<double> p4_ratio_scan(const mpq_class& lambda, const std::vector<long>& n_grid) {
  validate_scaling_grid(n_grid);
  std::vector<double> ratios;
  for (long n : n_grid) {
    const auto params = make_params(lambda, n);
    const double s4 = lp_norm(coeff_series_fft(params, default_kmax(params)), Exponent::finite(4)).power_sum;
    const double nd = static_cast<double>(n);
    ratios.push_back(s4 * nd / std::log(nd));
  }
  return ratios;
}

P4ModelComparison p4_model_comparison(const mpq_class& lambda, const std::vector<long>& n_grid) {
  const std::vector<double> ratios = p4_ratio_scan(lambda, n_grid);
  // log‖B‖₄ = (1/4)log(ratio·log n/n); subtract each model's shape and fit
  // the intercept, which is the mean of what remains.
  std::vector<double> log_model, power_model;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    const double nd = static_cast<double>(n_grid[i]);
    const double y = 0.25 * std::log(ratios[i] * std::log(nd) / nd);
    log_model.push_back(y - 0.25 * std::log(std::log(nd) / nd));
    power_model.push_back(y + 0.25 * std::log(nd));
  }
  auto ssr = [](const std::vector<double>& r) {
    double mean = 0;
    for (double v : r) mean += v;
    mean /= static_cast<double>(r.size());
    double s = 0;
    for (double v : r) s += (v - mean) * (v - mean);
    return s;
  };
  return {ssr(log_model), ssr(power_model)};
}

}  // namespace blaschke
