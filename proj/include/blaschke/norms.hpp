#pragma once

#include <array>
#include <optional>

#include "blaschke/engines.hpp"
#include "blaschke/rational.hpp"
#include "blaschke/regions.hpp"

namespace blaschke {

struct NormReport {
  Exponent p = Exponent::infinity();
  /// (Σ|B̂(k)|^p)^{1/p} over the series, or max|B̂(k)| for p = ∞.
  double value = 0;
  /// Σ|B̂(k)|^p over the series (value itself for p = ∞).
  double power_sum = 0;
  /// Mass per region I..VII; absent when no partition exists for this n.
  std::optional<std::array<double, 7>> per_region_mass;
  /// Bound on the omitted Σ_{k>kmax}|B̂(k)|^p (sup for p = ∞).
  double tail_certificate = 0;
};

/// Throws InsufficientRange when tail_certificate > 1% of the power sum.
/// Regions use alpha, defaulting to default_region_alpha.
NormReport lp_norm(const CoefficientSeries& series, const Exponent& p,
                   const std::optional<mpq_class>& alpha = std::nullopt);

}  // namespace blaschke
