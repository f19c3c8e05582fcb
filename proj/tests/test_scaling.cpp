#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "blaschke/errors.hpp"
#include "blaschke/regions.hpp"
#include "blaschke/scaling.hpp"
#include "blaschke/weyl.hpp"

using namespace blaschke;

namespace {
Exponent E(const char* p) { return Exponent::parse(p); }
const mpq_class kHalf(1, 2);
}  // namespace

TEST_SUITE("scaling") {

TEST_CASE("least squares on exact and noisy lines") {
  std::vector<std::pair<double, double>> line;
  for (int i = 0; i < 7; ++i) line.emplace_back(i * 0.7, -i * 0.7 / 3 + 2.5);
  const auto f = fit_exponent(line);
  CHECK(f.slope == doctest::Approx(-1.0 / 3).epsilon(1e-14));
  CHECK(f.slope_stderr <= 1e-14);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
  std::vector<std::pair<double, double>> noisy;
  for (int i = 0; i < 12; ++i) noisy.emplace_back(i, 0.5 * i + noise(rng));
  const auto g = fit_exponent(noisy);
  CHECK(std::fabs(g.slope - 0.5) <= 1e-5);
  CHECK(g.slope_stderr < 1e-6);

  CHECK_THROWS_AS(fit_exponent({{0, 1}, {1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(fit_exponent({{1, 1}, {1, 2}, {1, 3}, {1, 4}}), DegenerateFit);
}

TEST_CASE("slope is invariant under rescaling the norms") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> y(-3, 3), scale(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<double, double>> pts, shifted;
    const double c = scale(rng);
    const int m = 4 + trial % 9;
    for (int i = 0; i < m; ++i) {
      const double x = std::log(64.0) + i * std::log(2.0);
      const double v = y(rng);
      pts.emplace_back(x, v);
      shifted.emplace_back(x, v + c);  // log(e^c · norm)
    }
    const auto a = fit_exponent(pts);
    const auto b = fit_exponent(shifted);
    CHECK(a.slope == doctest::Approx(b.slope).epsilon(1e-9).scale(1));
    CHECK(a.slope_stderr == doctest::Approx(b.slope_stderr).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("theory exponents are exact") {
  CHECK(theory_slope(E("1")) == mpq_class(1, 2));
  CHECK(theory_slope(E("3/2")) == mpq_class(1, 6));
  CHECK(theory_slope(E("2")) == 0);
  CHECK(theory_slope(E("3")) == mpq_class(-1, 6));
  CHECK(theory_slope(E("3.5")) == mpq_class(-3, 14));
  CHECK(theory_slope(E("4")) == 1);
  CHECK(theory_slope(E("5")) == mpq_class(-4, 15));
  CHECK(theory_slope(E("6")) == mpq_class(-5, 18));
  CHECK(theory_slope(E("8")) == mpq_class(-7, 24));
  CHECK(theory_slope(E("inf")) == mpq_class(-1, 3));
}

TEST_CASE("grid validation") {
  CHECK(geometric_grid(128, 8192) == std::vector<long>{128, 256, 512, 1024, 2048, 4096, 8192});
  CHECK_NOTHROW(validate_scaling_grid({64, 128, 256, 512}));
  CHECK_THROWS_AS(validate_scaling_grid({64, 128, 256}), DomainError);
  CHECK_THROWS_AS(validate_scaling_grid({32, 64, 128, 256}), DomainError);
  CHECK_THROWS_AS(validate_scaling_grid({64, 128, 384, 768}), DomainError);
}

TEST_CASE("p = 2 has zero slope") {
  for (const mpq_class& l : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)}) {
    const auto fit = run_norm_scaling(l, E("2"), geometric_grid(64, 1024));
    CHECK(std::fabs(fit.fitted_slope) <= 0.01);
    CHECK(fit.spot_check <= 1e-9);
    CHECK(fit.theory_slope == 0);
    CHECK(fit.warnings.empty());
  }
}

TEST_CASE("p = 4 switches model and p near 4 warns") {
  const auto grid = geometric_grid(64, 512);
  const auto four = run_norm_scaling(kHalf, E("4"), grid);
  CHECK(four.log_corrected);
  CHECK(four.theory_slope == 1);
  CHECK(four.abscissae[0] == doctest::Approx(0.25 * std::log(std::log(64.0) / 64)));
  const auto near = run_norm_scaling(kHalf, E("3.97"), grid);
  CHECK_FALSE(near.log_corrected);
  CHECK(near.warnings.size() == 1);
}

TEST_CASE("slopes match the theory exponents") {
  const auto grid = geometric_grid(128, 8192);
  for (const mpq_class& l : {mpq_class(1, 4), mpq_class(1, 2)}) {
    for (const char* p : {"1", "3/2", "2", "3", "3.5", "5", "6", "8", "inf"}) {
      const auto fit = run_norm_scaling(l, E(p), grid);
      CAPTURE(p);
      CAPTURE(l.get_str());
      CHECK(std::fabs(fit.fitted_slope - fit.theory_slope.get_d()) <= 0.03);
    }
  }
}

TEST_CASE("p = 4 ratio scan") {
  const auto grid = geometric_grid(256, 8192);
  const auto ratios = p4_ratio_scan(kHalf, grid);
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  CHECK(*hi / *lo <= 2.5);
  for (std::size_t i = 1; i < ratios.size(); ++i) CHECK(std::fabs(ratios[i] / ratios[i - 1] - 1) < 0.15);
  const auto cmp = p4_model_comparison(kHalf, grid);
  CHECK(cmp.log_corrected_ssr < cmp.power_law_ssr);
}

TEST_CASE("Weyl sums") {
  CHECK_THROWS_AS(weyl_sums(kHalf, 4096, 0), DomainError);
  CHECK_THROWS_AS(weyl_sums(kHalf, 2, 1), PreconditionViolation);

  const auto small = weyl_sums(kHalf, 4096, 1);
  CHECK(small.k_first == 3 * 4096 - 512);
  CHECK(small.k_last == 3 * 4096 - 64);
  for (double s : small.s_values) CHECK((s >= 0 && s < 1));
  for (std::size_t i = 0; i < small.partial_sums.size(); ++i) CHECK(std::abs(small.partial_sums[i]) <= i + 1 + 1e-9);

  const auto a14 = weyl_sums(kHalf, 1L << 14, 1);
  const auto a16 = weyl_sums(kHalf, 1L << 16, 1);
  const double C = a14.max_abs_A / std::pow(double(1L << 14), 7.0 / 16);
  CHECK(a16.max_abs_A <= C * std::pow(double(1L << 16), 7.0 / 16));
  for (const auto* e : {&a14, &a16}) CHECK(std::log(e->max_abs_A) / std::log(double(e->n)) <= 0.47);

  const auto h = histogram(a16.s_values, 16);
  const double expected = static_cast<double>(a16.s_values.size()) / 16;
  for (long c : h) CHECK(std::fabs(c - expected) <= 0.25 * expected);

  const auto minus = weyl_sums(kHalf, 1L << 14, -1);
  CHECK(minus.max_abs_A == doctest::Approx(a14.max_abs_A).epsilon(1e-9));
}

TEST_CASE("histogram bins") {
  CHECK(histogram({0.0, 0.49, 0.5, 0.999}, 2) == std::vector<long>{2, 2});
  CHECK_THROWS_AS(histogram({0.1}, 0), DomainError);
}

TEST_CASE("fourth-power mass near the right critical index") {
  CHECK_THROWS_AS(airy_regime_mass(kHalf, 512), PreconditionViolation);
  std::vector<double> ratios;
  for (long n = 1024; n <= 8192; n *= 2) {
    const auto m = airy_regime_mass(kHalf, n);
    CHECK(m.mass <= m.total);
    const auto params = make_params(kHalf, n);
    const auto part = region_partition(params, default_region_alpha(params));
    for (long k : {m.k_first, m.k_last}) {
      const Region r = part.region_of(k);
      CHECK((r == Region::IV || r == Region::V));
    }
    ratios.push_back(m.ratio);
  }
  const double floor = 0.5 * ratios.front();
  for (double r : ratios) CHECK(r >= floor);
}

}  // TEST_SUITE
