#pragma once

#include <complex>
#include <span>
#include <vector>

#include "blaschke/engines.hpp"
#include "blaschke/params.hpp"

// Data-parallel inner loops. Every kernel in `kernels` is OpenMP-parallel and
// writes each output slot from exactly one iteration, so results do not
// depend on the thread count or schedule. `kernels::serial` holds the plain
// reference loops the tests and benchmarks compare against.
namespace blaschke::kernels {

/// out[j] = e^{i n f_λ(2πj/N)} with N = out.size(). The phase n·f_λ is
/// reduced mod 2π in long double before the complex exponential.
void boundary_samples(double lambda, long n, std::span<std::complex<double>> out);

/// B̂(k) for each k by the exact convolution, rounded to double.
std::vector<double> exact_values(const BlaschkeParams& params, std::span<const long> ks);

std::vector<OscillatoryResult> oscillatory_values(const BlaschkeParams& params,
                                                  std::span<const long> ks,
                                                  const OscillatoryOptions& options = {});

/// Σ|x_k|^p. Fixed blocks of 2048 are summed with Neumaier compensation and
/// the block partials are combined in index order.
double power_sum(std::span<const double> x, double p);

double max_abs(std::span<const double> x);

/// frac(scale·d_k^{3/2}) with d_k = offset - k for k = k_first + i. Used by
/// the Weyl-sum experiment where d_k = α₀⁻¹n - k.
std::vector<double> weyl_fractional_parts(long k_first, long count, long double offset, long double scale);

/// Ai at each argument.
std::vector<double> airy_values(std::span<const double> x);

namespace serial {

void boundary_samples(double lambda, long n, std::span<std::complex<double>> out);
std::vector<double> exact_values(const BlaschkeParams& params, std::span<const long> ks);
std::vector<OscillatoryResult> oscillatory_values(const BlaschkeParams& params,
                                                  std::span<const long> ks,
                                                  const OscillatoryOptions& options = {});
/// Single left-to-right Neumaier sum.
double power_sum(std::span<const double> x, double p);
double max_abs(std::span<const double> x);
std::vector<double> weyl_fractional_parts(long k_first, long count, long double offset, long double scale);
std::vector<double> airy_values(std::span<const double> x);

}  // namespace serial

}  // namespace blaschke::kernels
