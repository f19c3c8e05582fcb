#include "blaschke/norms.hpp"

#include <cmath>
#include <sstream>

#include "blaschke/errors.hpp"
#include "blaschke/kernels.hpp"

namespace blaschke {

NormReport lp_norm(const CoefficientSeries& series, const Exponent& p, const std::optional<mpq_class>& alpha) {
  NormReport r;
  r.p = p;
  const double T = tail_bound(series.params, series.kmax + 1);

  if (p.is_infinite()) {
    r.value = kernels::max_abs(series.values);
    r.power_sum = r.value;
    r.tail_certificate = T;
  } else {
    const double pd = p.to_double();
    r.power_sum = kernels::power_sum(series.values, pd);
    r.value = std::pow(r.power_sum, 1 / pd);
    // Σ x_k^p ≤ (Σ x_k)^p for x_k ≥ 0 and p ≥ 1.
    r.tail_certificate = std::isinf(T) ? T : std::pow(T, pd);
  }
  if (!(r.tail_certificate <= 0.01 * r.power_sum)) {
    std::ostringstream msg;
    msg << "series up to kmax=" << series.kmax << " leaves tail certificate " << r.tail_certificate
        << " above 1% of " << r.power_sum << " for p=" << p.str();
    throw InsufficientRange(msg.str());
  }

  try {
    const RegionPartition part =
        region_partition(series.params, alpha ? *alpha : default_region_alpha(series.params));
    if (part.boundaries.back() <= series.kmax) {
      std::array<double, 7> mass{};
      for (Region reg : kAllRegions) mass[static_cast<std::size_t>(reg) - 1] = region_mass(series, part, reg, p);
      r.per_region_mass = mass;
    }
  } catch (const OrderingError&) {
  }
  return r;
}

}  // namespace blaschke
