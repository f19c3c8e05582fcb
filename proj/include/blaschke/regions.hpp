#pragma once

#include <gmpxx.h>

#include <array>
#include <limits>
#include <string_view>

#include "blaschke/engines.hpp"
#include "blaschke/params.hpp"
#include "blaschke/rational.hpp"

namespace blaschke {

enum class Region { I = 1, II, III, IV, V, VI, VII };

inline constexpr std::array<Region, 7> kAllRegions{Region::I,  Region::II, Region::III, Region::IV,
                                                   Region::V,  Region::VI, Region::VII};

std::string_view to_string(Region r);

inline constexpr long kUnbounded = std::numeric_limits<long>::max();

/// The seven k-ranges of the decay table for a given (n, α), 0 < α < α₀.
///
/// boundaries = ⌊αn⌋, ⌊α₀n - n^{1/3}⌋, ⌈α₀n + n^{1/3}⌉, ⌊α₀⁻¹n - n^{1/3}⌋,
/// ⌈α₀⁻¹n + n^{1/3}⌉, ⌈α⁻¹n⌉. Region r is (b_{r-1}, b_r] with b_0 = -1 and
/// b_7 = ∞, so a boundary point belongs to the lower-numbered region.
struct RegionPartition {
  BlaschkeParams params;
  mpq_class alpha;
  std::array<long, 6> boundaries{};

  /// First and last k of a region; last is kUnbounded for VII. A region is
  /// empty when first > last.
  long first(Region r) const;
  long last(Region r) const;
  bool empty(Region r) const { return first(r) > last(r); }
  Region region_of(long k) const;
};

/// Throws PreconditionViolation unless 0 < α < α₀ and OrderingError when the
/// boundaries are not nondecreasing (small n).
RegionPartition region_partition(const BlaschkeParams& params, const mpq_class& alpha);

/// α₀/2, the default split between regions I and II.
mpq_class default_region_alpha(const BlaschkeParams& params);

/// Σ_{k ∈ region, k ≤ kmax} |B̂(k)|^p, or the partial sup for p = ∞. Regions
/// I-VI must lie inside the series (InsufficientRange otherwise); region VII
/// is summed up to kmax and the rest is covered by the lp_norm tail.
double region_mass(const CoefficientSeries& series, const RegionPartition& partition, Region region,
                   const Exponent& p);

}  // namespace blaschke
