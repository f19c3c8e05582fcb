#include "blaschke/envelope.hpp"

#include <cmath>

#include "detail/minimize.hpp"

namespace blaschke {

namespace {

double log_inner_radius_bound(double lambda, long n, long k) {
  auto L = [&](double s) {
    return static_cast<double>(n) * (std::log(s + lambda) - std::log1p(lambda * s)) -
           static_cast<double>(k) * std::log(s);
  };
  return detail::minimize_scan(L, 0.0, 1.0);
}

double log_outer_radius_bound(double lambda, long n, long k) {
  auto L = [&](double u) {
    const double s = std::exp(u);
    return static_cast<double>(n) * (std::log(s - lambda) - std::log1p(-lambda * s)) - static_cast<double>(k) * u;
  };
  return detail::minimize_scan(L, 0.0, -std::log(lambda));
}

}  // namespace

Envelope decay_envelope(const RegionPartition& partition, long k) {
  const BlaschkeParams& params = partition.params;
  const long n = params.n();
  const double nd = static_cast<double>(n);
  Envelope e;
  e.region = partition.region_of(k);
  switch (e.region) {
    case Region::I:
      e.log_value = log_inner_radius_bound(params.lambda_d(), n, k);
      break;
    case Region::II:
      e.log_value = -std::log(std::fabs(mpq_class(params.alpha0() * n - k).get_d()));
      break;
    case Region::III:
    case Region::V:
      e.log_value = -std::log(nd) / 3;
      break;
    case Region::IV: {
      const mpq_class a(k, n);
      const double left = mpq_class(a - params.alpha0()).get_d();
      const double right = mpq_class(params.alpha0_inv() - a).get_d();
      e.log_value = -0.5 * std::log(nd) - 0.25 * (std::log(left) + std::log(right));
      break;
    }
    case Region::VI:
      e.log_value = -std::log(std::fabs(mpq_class(k - params.alpha0_inv() * n).get_d()));
      break;
    case Region::VII:
      e.log_value = log_outer_radius_bound(params.lambda_d(), n, k);
      break;
  }
  return e;
}

Envelope decay_envelope(const BlaschkeParams& params, long k, const mpq_class& alpha) {
  return decay_envelope(region_partition(params, alpha), k);
}

}  // namespace blaschke
