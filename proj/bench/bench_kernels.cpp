#include <benchmark/benchmark.h>

#include <complex>
#include <numeric>
#include <vector>

#include "blaschke/engines.hpp"
#include "blaschke/kernels.hpp"
#include "blaschke/rational.hpp"

using namespace blaschke;

namespace {

const BlaschkeParams& params_half(long n) {
  static std::vector<std::pair<long, BlaschkeParams>> cache;
  for (const auto& [m, p] : cache)
    if (m == n) return p;
  cache.emplace_back(n, make_params(mpq_class(1, 2), n));
  return cache.back().second;
}

std::vector<long> index_range(long first, long count) {
  std::vector<long> ks(static_cast<std::size_t>(count));
  std::iota(ks.begin(), ks.end(), first);
  return ks;
}

template <bool Parallel>
void BM_boundary_samples(benchmark::State& state) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::boundary_samples(0.5, 4096, out);
    else
      kernels::serial::boundary_samples(0.5, 4096, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_exact_values(benchmark::State& state) {
  const auto& params = params_half(state.range(0));
  const auto ks = index_range(0, 64);
  for (auto _ : state) {
    auto v = Parallel ? kernels::exact_values(params, ks) : kernels::serial::exact_values(params, ks);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_oscillatory_values(benchmark::State& state) {
  const auto& params = params_half(state.range(0));
  const auto ks = index_range(0, 4 * state.range(0));
  for (auto _ : state) {
    auto v = Parallel ? kernels::oscillatory_values(params, ks) : kernels::serial::oscillatory_values(params, ks);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_power_sum(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 1.0 / static_cast<double>(i + 1);
  for (auto _ : state) {
    const double s = Parallel ? kernels::power_sum(x, 3.5) : kernels::serial::power_sum(x, 3.5);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_weyl_fractional_parts(benchmark::State& state) {
  const long count = state.range(0);
  for (auto _ : state) {
    auto v = Parallel ? kernels::weyl_fractional_parts(0, count, 3.0L * count, 0.1L)
                      : kernels::serial::weyl_fractional_parts(0, count, 3.0L * count, 0.1L);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * count);
}

template <bool Parallel>
void BM_airy_values(benchmark::State& state) {
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = -20.0 + 25.0 * static_cast<double>(i) / static_cast<double>(x.size());
  for (auto _ : state) {
    auto v = Parallel ? kernels::airy_values(x) : kernels::serial::airy_values(x);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_boundary_samples<false>)->Name("boundary_samples/serial")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_boundary_samples<true>)->Name("boundary_samples/parallel")->Arg(1 << 16)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_exact_values<false>)->Name("exact_values/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_exact_values<true>)->Name("exact_values/parallel")->Arg(256)->Arg(1024)->UseRealTime();
BENCHMARK(BM_oscillatory_values<false>)->Name("oscillatory_values/serial")->Arg(64);
BENCHMARK(BM_oscillatory_values<true>)->Name("oscillatory_values/parallel")->Arg(64)->UseRealTime();
BENCHMARK(BM_power_sum<false>)->Name("power_sum/serial")->Arg(1 << 16)->Arg(1 << 22);
BENCHMARK(BM_power_sum<true>)->Name("power_sum/parallel")->Arg(1 << 16)->Arg(1 << 22)->UseRealTime();
BENCHMARK(BM_weyl_fractional_parts<false>)->Name("weyl_fractional_parts/serial")->Arg(1 << 16);
BENCHMARK(BM_weyl_fractional_parts<true>)->Name("weyl_fractional_parts/parallel")->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_airy_values<false>)->Name("airy_values/serial")->Arg(4096);
BENCHMARK(BM_airy_values<true>)->Name("airy_values/parallel")->Arg(4096)->UseRealTime();

BENCHMARK_MAIN();
