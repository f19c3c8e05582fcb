#include <fftw3.h>

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>
#include <string>

#include "blaschke/engines.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/kernels.hpp"

namespace blaschke {

namespace {

// FFTW's planner is not reentrant; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

bool is_power_of_two(long x) { return x > 0 && (x & (x - 1)) == 0; }

constexpr double kResolutionFloor = 1e-12;

}  // namespace

CoefficientSeries coeff_series_fft(const BlaschkeParams& params, long kmax, long grid_size,
                                   double target_abs_error) {
  if (kmax < 0) throw DomainError("kmax must be >= 0");
  if (!is_power_of_two(grid_size))
    throw GridTooSmall("FFT grid must be a power of two, got " + std::to_string(grid_size));
  if (grid_size < 2 * kmax + 2)
    throw GridTooSmall("FFT grid " + std::to_string(grid_size) + " < 2*kmax+2 = " + std::to_string(2 * kmax + 2));
  const double aliasing = tail_bound(params, grid_size - kmax);
  if (!(aliasing <= target_abs_error))
    throw GridTooSmall("aliasing bound " + std::to_string(aliasing) + " exceeds target " +
                       std::to_string(target_abs_error) + " on grid " + std::to_string(grid_size));

  const auto N = static_cast<std::size_t>(grid_size);
  std::unique_ptr<fftw_complex, FftwFree> buf(fftw_alloc_complex(N));
  if (!buf) throw std::bad_alloc();
  auto* data = reinterpret_cast<std::complex<double>*>(buf.get());

  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(grid_size), buf.get(), buf.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  kernels::boundary_samples(params.lambda_d(), params.n(), {data, N});
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  CoefficientSeries s(params);
  s.kmax = kmax;
  s.engine = Engine::fft;
  s.values.resize(static_cast<std::size_t>(kmax + 1));
  const double scale = 1.0 / static_cast<double>(grid_size);
  double max_imag = 0;
  for (long k = 0; k <= kmax; ++k) {
    const std::complex<double> c = data[k] * scale;
    s.values[static_cast<std::size_t>(k)] = c.real();
    max_imag = std::max(max_imag, std::fabs(c.imag()));
  }
  s.max_discarded_imag = max_imag;
  s.resolution_floor = kResolutionFloor;
  const double roundoff = 16 * std::numeric_limits<double>::epsilon() * std::log2(static_cast<double>(grid_size));
  s.achieved_abs_error = aliasing + roundoff;
  return s;
}

CoefficientSeries coeff_series_fft(const BlaschkeParams& params, long kmax) {
  long grid = default_fft_grid(params);
  while (grid < 2 * kmax + 2) grid <<= 1;
  while (tail_bound(params, grid - kmax) > 1e-12) grid <<= 1;
  return coeff_series_fft(params, kmax, grid);
}

}  // namespace blaschke
