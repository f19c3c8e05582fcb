#pragma once

#include <gmpxx.h>

#include <cmath>

#include "blaschke/params.hpp"
#include "blaschke/regions.hpp"

namespace blaschke {

/// Decay envelope of |B̂(k)| for the region containing k, kept as a log so
/// the exponential regions do not underflow.
struct Envelope {
  Region region = Region::I;
  double log_value = 0;
  double value() const { return std::exp(log_value); }
};

/// I:   min over s ∈ (0,1) of ((s+λ)/(1+λs))^n s^{-k}
/// II:  1/|α₀n - k|
/// III: n^{-1/3}
/// IV:  n^{-1/2}((k/n - α₀)(α₀⁻¹ - k/n))^{-1/4}
/// V:   n^{-1/3}
/// VI:  1/|k - α₀⁻¹n|
/// VII: min over s ∈ (1, 1/λ) of ((s-λ)/(1-λs))^n s^{-k}
/// Regions come from region_partition(params, alpha).
Envelope decay_envelope(const BlaschkeParams& params, long k, const mpq_class& alpha);
Envelope decay_envelope(const RegionPartition& partition, long k);

}  // namespace blaschke
