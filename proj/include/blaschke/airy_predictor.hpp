#pragma once

#include <vector>

#include "blaschke/engines.hpp"
#include "blaschke/params.hpp"

namespace blaschke {

/// Leading term of the uniform Airy expansion of B̂(k) near k = α₀⁻¹n.
struct AiryPrediction {
  long k = 0;
  /// k/n
  double alpha = 0;
  /// γ² = δ² = (α₀⁻¹ - α)(1-λ)/(λ(1+λ))^{1/3}
  double gamma2 = 0;
  double delta2 = 0;
  /// (1-λ)^{1/4}/(λ(1+λ))^{1/12} · √2/(√α (α-α₀)^{1/4}); NaN for α ≤ α₀.
  double a0 = 0;
  /// The second coefficient vanishes identically.
  double a1 = 0;
  /// -n^{2/3}δ²
  double airy_argument = 0;
  /// a0·Ai(airy_argument)/n^{1/3}
  double predicted = 0;
  /// α₀⁻¹n - n^{3/4} ≤ k ≤ α₀⁻¹n
  bool in_window = false;
};

AiryPrediction airy_predict(const BlaschkeParams& params, long k);

/// Predictions for k_first..k_last; the Airy evaluations run in parallel.
std::vector<AiryPrediction> airy_predict_range(const BlaschkeParams& params, long k_first, long k_last);

/// (1-λ)/((λ(1+λ))^{1/3}·3^{2/3}Γ(2/3)), the limit of n^{1/3}B̂(k) at k = α₀⁻¹n.
double boundary_constant(const BlaschkeParams& params);

struct SupCoefficient {
  long k = 0;
  double value = 0;
};

/// argmax_k |B̂(k)| over the series, with the signed value.
SupCoefficient sup_coefficient(const CoefficientSeries& series);
/// Same over the FFT series with the default kmax.
SupCoefficient sup_coefficient(const BlaschkeParams& params);

}  // namespace blaschke
