#pragma once

#include <optional>

#include "blaschke/params.hpp"

namespace blaschke {

/// g(t) = n f_λ(t) - k t, the phase of π·B̂(k) = Re ∫₀^π e^{ig(t)} dt.
class PhaseFunction {
 public:
  PhaseFunction(BlaschkeParams params, long k);

  const BlaschkeParams& params() const { return params_; }
  long k() const { return k_; }
  /// k/n as an exact rational.
  const mpq_class& ratio() const { return ratio_; }

  double value(double t) const;
  double slope(double t) const;
  double curvature(double t) const;

  /// g'(0) = nα₀⁻¹ - k and g'(π) = nα₀ - k, from exact rationals.
  double slope_at_zero() const;
  double slope_at_pi() const;

 private:
  BlaschkeParams params_;
  long k_;
  mpq_class ratio_;
};

/// φ₊ ∈ [0, π] with g'(φ₊) = 0, from cos φ₊ = (α(1+λ²) - (1-λ²))/(2λα),
/// α = k/n. Present exactly when α₀ ≤ α ≤ α₀⁻¹.
std::optional<double> stationary_point(const PhaseFunction& phase);

/// |g''(φ₊)| = k·(α - α₀)^{1/2}·(α₀⁻¹ - α)^{1/2}. Throws PreconditionViolation
/// when φ₊ does not exist.
double g2_at_stationary(const PhaseFunction& phase);

/// 2/|g'(a)| + 2/|g'(b)|, a bound for |∫_a^b e^{ig}| when g' keeps one sign.
/// Throws PreconditionViolation if g' vanishes or changes sign on [a, b].
double vdc_bound(const PhaseFunction& phase, double a, double b);

}  // namespace blaschke
