#include "blaschke/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

#include "blaschke/airy.hpp"
#include "blaschke/boundary_phase.hpp"

namespace blaschke::kernels {

namespace {

constexpr std::size_t kBlock = 2048;

inline std::complex<double> boundary_sample(long double lambda, long n, long double step, long j) {
  constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
  const long double t = step * static_cast<long double>(j);
  long double phase = std::fmod(static_cast<long double>(n) * boundary_angle(lambda, t), two_pi);
  const double ph = static_cast<double>(phase);
  return {std::cos(ph), std::sin(ph)};
}

inline double power_abs(double x, double p) {
  const double a = std::fabs(x);
  if (p == 1) return a;
  if (p == 2) return a * a;
  if (p == 4) return (a * a) * (a * a);
  return std::pow(a, p);
}

struct Neumaier {
  double sum = 0;
  double comp = 0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

inline double weyl_part(long k, long double offset, long double scale) {
  const long double d = offset - static_cast<long double>(k);
  const long double x = scale * d * std::sqrt(d);
  const long double f = x - std::floor(x);
  return f >= 1 ? 0.0 : static_cast<double>(f);
}

double rounded(const mpq_class& q) { return hp::Real::from_mpq(q, 53).to_double(); }

}  // namespace

void boundary_samples(double lambda, long n, std::span<std::complex<double>> out) {
  const auto N = static_cast<long>(out.size());
  const long double lam = lambda;
  const long double step = 2 * std::numbers::pi_v<long double> / static_cast<long double>(N);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < N; ++j) out[static_cast<std::size_t>(j)] = boundary_sample(lam, n, step, j);
}

std::vector<double> exact_values(const BlaschkeParams& params, std::span<const long> ks) {
  std::vector<double> out(ks.size());
  const auto m = static_cast<long>(ks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = rounded(coeff_rational(params, ks[static_cast<std::size_t>(i)]));
  return out;
}

std::vector<OscillatoryResult> oscillatory_values(const BlaschkeParams& params, std::span<const long> ks,
                                                  const OscillatoryOptions& options) {
  std::vector<OscillatoryResult> out(ks.size());
  const auto m = static_cast<long>(ks.size());
  // Exceptions may not cross the parallel region; rethrow the first one after.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < m; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = coeff_oscillatory(params, ks[static_cast<std::size_t>(i)], options);
    } catch (...) {
#pragma omp critical(blaschke_oscillatory_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double power_sum(std::span<const double> x, double p) {
  const std::size_t blocks = (x.size() + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks);
  const auto nb = static_cast<long>(blocks);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < nb; ++b) {
    Neumaier acc;
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(x.size(), lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) acc.add(power_abs(x[i], p));
    partial[static_cast<std::size_t>(b)] = acc.value();
  }
  Neumaier total;
  for (double v : partial) total.add(v);
  return total.value();
}

double max_abs(std::span<const double> x) {
  double m = 0;
  const auto len = static_cast<long>(x.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (long i = 0; i < len; ++i) m = std::max(m, std::fabs(x[static_cast<std::size_t>(i)]));
  return m;
}

std::vector<double> weyl_fractional_parts(long k_first, long count, long double offset, long double scale) {
  std::vector<double> out(static_cast<std::size_t>(std::max(0L, count)));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = weyl_part(k_first + i, offset, scale);
  return out;
}

std::vector<double> airy_values(std::span<const double> x) {
  std::vector<double> out(x.size());
  const auto len = static_cast<long>(x.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < len; ++i) out[static_cast<std::size_t>(i)] = airy_ai(x[static_cast<std::size_t>(i)]);
  return out;
}

namespace serial {

void boundary_samples(double lambda, long n, std::span<std::complex<double>> out) {
  const auto N = static_cast<long>(out.size());
  const long double lam = lambda;
  const long double step = 2 * std::numbers::pi_v<long double> / static_cast<long double>(N);
  for (long j = 0; j < N; ++j) out[static_cast<std::size_t>(j)] = boundary_sample(lam, n, step, j);
}

std::vector<double> exact_values(const BlaschkeParams& params, std::span<const long> ks) {
  std::vector<double> out;
  out.reserve(ks.size());
  for (long k : ks) out.push_back(rounded(coeff_rational(params, k)));
  return out;
}

std::vector<OscillatoryResult> oscillatory_values(const BlaschkeParams& params, std::span<const long> ks,
                                                  const OscillatoryOptions& options) {
  std::vector<OscillatoryResult> out;
  out.reserve(ks.size());
  for (long k : ks) out.push_back(coeff_oscillatory(params, k, options));
  return out;
}

double power_sum(std::span<const double> x, double p) {
  Neumaier acc;
  for (double v : x) acc.add(power_abs(v, p));
  return acc.value();
}

double max_abs(std::span<const double> x) {
  double m = 0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<double> weyl_fractional_parts(long k_first, long count, long double offset, long double scale) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long i = 0; i < count; ++i) out.push_back(weyl_part(k_first + i, offset, scale));
  return out;
}

std::vector<double> airy_values(std::span<const double> x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (double v : x) out.push_back(airy_ai(v));
  return out;
}

}  // namespace serial

}  // namespace blaschke::kernels
