#include <cmath>
#include <limits>

#include "blaschke/engines.hpp"
#include "detail/minimize.hpp"

namespace blaschke {

namespace {

// ln of Σ_{k≥K} b(s)^n s^{-k} = b(s)^n s^{-K} / (1 - 1/s) at s = e^u, where
// b(s) = (s-λ)/(1-λs) is the maximum of |b_λ| on |z| = s.
double log_geometric_tail(double lambda, long n, long K, double u) {
  const double s = std::exp(u);
  const double log_b = std::log(s - lambda) - std::log1p(-lambda * s);
  return static_cast<double>(n) * log_b - static_cast<double>(K) * u - std::log(-std::expm1(-u));
}

}  // namespace

double log_tail_bound(const BlaschkeParams& params, long K) {
  // The bound is finite only when K > α₀⁻¹n, i.e. K(1-λ) > n(1+λ).
  if (mpq_class(K) * (1 - params.lambda()) <= mpq_class(params.n()) * (1 + params.lambda()))
    return std::numeric_limits<double>::infinity();

  const double lambda = params.lambda_d();
  const long n = params.n();
  const double umax = -std::log(lambda);
  auto L = [&](double u) { return log_geometric_tail(lambda, n, K, u); };

  return detail::minimize_scan(L, 0.0, umax);
}

double tail_bound(const BlaschkeParams& params, long K) {
  const double lt = log_tail_bound(params, K);
  if (std::isinf(lt)) return lt;
  return std::max(std::exp(lt), std::numeric_limits<double>::denorm_min());
}

SeriesIdentities check_identities(const CoefficientSeries& series) {
  SeriesIdentities r;
  double sum = 0, alt = 0, sq = 0;
  for (long k = 0; k <= series.kmax; ++k) {
    const double v = series[k];
    sum += v;
    alt += (k % 2 == 0) ? v : -v;
    sq += v * v;
  }
  r.sum_residual = std::fabs(sum - 1);
  r.alternating_residual = std::fabs(alt - (series.params.n() % 2 == 0 ? 1.0 : -1.0));
  r.plancherel_residual = std::fabs(sq - 1);
  const double terms = static_cast<double>(series.kmax + 1);
  r.tolerance = tail_bound(series.params, series.kmax + 1) +
                terms * (series.achieved_abs_error + 4 * std::numeric_limits<double>::epsilon());
  return r;
}

}  // namespace blaschke
