#pragma once

#include <gmpxx.h>

#include <string_view>
#include <utility>
#include <vector>

#include "blaschke/hp_real.hpp"
#include "blaschke/params.hpp"

namespace blaschke {

enum class Engine { exact, fft, oscillatory };

std::string_view to_string(Engine e);

/// Precision control for the multiprecision route of coeff_exact.
struct PrecisionPolicy {
  double target_abs_error = 1e-20;
  long start_bits = 64;
  long max_bits = 1L << 22;

  /// start_bits = 64 + ceil(n·log2((1+λ)/(1-λ))), which covers the worst-case
  /// cancellation Σ|terms| ≤ ((1+λ)/(1-λ))^n of the convolution.
  static PrecisionPolicy for_params(const BlaschkeParams& params, double target_abs_error = 1e-20);
  /// Throws DomainError unless start_bits ≥ 64 and max_bits ≥ start_bits.
  void validate() const;
};

long default_start_bits(const BlaschkeParams& params);

/// One coefficient with its absolute error bound.
struct Coefficient {
  hp::Real value;
  double abs_error = 0;
  /// True when the value came from exact integer arithmetic.
  bool rational = false;
  /// Working precision of the final value.
  long bits = 0;
};

struct CoefficientSeries {
  explicit CoefficientSeries(BlaschkeParams p) : params(std::move(p)) {}

  BlaschkeParams params;
  long kmax = 0;
  std::vector<double> values;
  Engine engine = Engine::exact;
  double achieved_abs_error = 0;
  /// Magnitudes below this are roundoff noise (FFT engine: 1e-12).
  double resolution_floor = 0;
  /// Largest |Im| discarded by the FFT engine.
  double max_discarded_imag = 0;
  /// ln|B̂(k)|, filled by the exact engine only (-inf for exact zeros).
  std::vector<double> log_abs;

  double operator[](long k) const { return values[static_cast<std::size_t>(k)]; }
  bool below_resolution(long k) const;
};

/// ceil(2n/α₀), doubled while tail_bound(kmax+1) > 1e-17 (only small n need
/// the extension).
long default_kmax(const BlaschkeParams& params);
/// Smallest power of two ≥ 8·ceil(n/α₀).
long default_fft_grid(const BlaschkeParams& params);

// --- exact engine --------------------------------------------------------

/// N_k = q^{n+k}·B̂(k) for λ = p/q, an integer. Convolution of the binomial
/// series of (qz-p)^n and (1-λz)^{-n}; every term is built from the previous
/// one by exact small-integer multiplication and exact division.
mpz_class exact_numerator(const BlaschkeParams& params, long k);

/// B̂(k) as an exact rational.
mpq_class coeff_rational(const BlaschkeParams& params, long k);

/// The same convolution in MPFR, doubling the working precision from
/// policy.start_bits until two successive precisions agree within
/// policy.target_abs_error. Throws PrecisionExhausted past max_bits.
Coefficient coeff_multiprecision(const BlaschkeParams& params, long k, const PrecisionPolicy& policy);

/// Exact integer route when the numerator stays below ~16M bits, otherwise
/// coeff_multiprecision. |error| ≤ policy.target_abs_error.
Coefficient coeff_exact(const BlaschkeParams& params, long k, const PrecisionPolicy& policy);

/// values[k] = B̂(k) for k ≤ kmax, correctly rounded to double.
CoefficientSeries coeff_series_exact(const BlaschkeParams& params, long kmax,
                                     const PrecisionPolicy& policy = {});

// --- FFT engine ----------------------------------------------------------

/// Coefficients from a DFT of the unimodular boundary samples e^{i n f_λ(t)}.
/// grid_size must be a power of two ≥ 2·kmax+2 and its aliasing bound
/// tail_bound(grid_size - kmax) must not exceed target_abs_error.
CoefficientSeries coeff_series_fft(const BlaschkeParams& params, long kmax, long grid_size,
                                   double target_abs_error = 1e-12);
CoefficientSeries coeff_series_fft(const BlaschkeParams& params, long kmax);

// --- oscillatory engine --------------------------------------------------

struct OscillatoryOptions {
  double target_abs_error = 1e-13;
  long max_panels = 1L << 20;
};

struct OscillatoryResult {
  double value = 0;
  double error_estimate = 0;
  long panels = 0;
};

/// B̂(k) = (1/π)∫₀^π cos(n f_λ(t) - k t) dt by panelled Gauss-Legendre with
/// panel width ≤ min(π/32, π/(1+|g'|)) at the panel center.
OscillatoryResult coeff_oscillatory(const BlaschkeParams& params, long k,
                                    const OscillatoryOptions& options = {});

CoefficientSeries coeff_series_oscillatory(const BlaschkeParams& params, long kmax,
                                           const OscillatoryOptions& options = {});

// --- tail ----------------------------------------------------------------

/// min over s ∈ (1, 1/λ) of Σ_{k≥K} b_λ(s)^n s^{-k}, an upper bound for
/// Σ_{k≥K}|B̂(k)|. Returns +inf when K ≤ α₀⁻¹n.
double tail_bound(const BlaschkeParams& params, long K);
/// Natural log of tail_bound, for bounds below the double range.
double log_tail_bound(const BlaschkeParams& params, long K);

/// Residuals of B(1) = 1, B(-1) = (-1)^n and Plancherel over the computed
/// range, plus the tolerance they must respect.
struct SeriesIdentities {
  double sum_residual = 0;
  double alternating_residual = 0;
  double plancherel_residual = 0;
  double tolerance = 0;
};

SeriesIdentities check_identities(const CoefficientSeries& series);

}  // namespace blaschke
