#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace blaschke {

/// Exponential sums of the fractional parts s_k = frac(n·φ(k/n)) with
/// φ(t) = (2/(3π))(1-λ)^{3/2}/(λ(1+λ))^{1/2}·(α₀⁻¹ - t)^{3/2}, over the window
/// k_first = ⌈α₀⁻¹n - n^{3/4}⌉ .. k_last = ⌊α₀⁻¹n - √n⌋.
struct WeylExperiment {
  mpq_class lambda;
  long n = 0;
  long j = 0;
  long k_first = 0;
  long k_last = 0;
  std::vector<double> s_values;
  /// A_k = Σ_{l ≤ k} exp(2πi j s_l), one per window index.
  std::vector<std::complex<double>> partial_sums;
  double max_abs_A = 0;
};

/// Throws DomainError for j = 0 and PreconditionViolation for an empty window.
WeylExperiment weyl_sums(const mpq_class& lambda, long n, long j);

/// Counts of values in [i/bins, (i+1)/bins).
std::vector<long> histogram(const std::vector<double>& values, int bins);

/// Σ_{k ∈ window}|B̂(k)|⁴ for the window above, and its ratio to log n/n.
struct AiryRegimeMass {
  long k_first = 0;
  long k_last = 0;
  double mass = 0;
  double ratio = 0;
  /// ‖B‖₄⁴ over the whole series, for comparison.
  double total = 0;
};

/// Requires n ≥ 2^10.
AiryRegimeMass airy_regime_mass(const mpq_class& lambda, long n);

}  // namespace blaschke
