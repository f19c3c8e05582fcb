#include <doctest.h>

#include <cmath>
#include <limits>

#include "blaschke/engines.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/rational.hpp"

using namespace blaschke;

namespace {
BlaschkeParams P(const char* lambda, long n) { return make_params(parse_rational(lambda), n); }
}  // namespace

TEST_SUITE("core") {

TEST_CASE("make_params derives alpha0 exactly") {
  CHECK(P("1/2", 10).alpha0() == mpq_class(1, 3));
  CHECK(P("1/3", 1).alpha0() == mpq_class(1, 2));
  CHECK(P("1/2", 10).alpha0() * P("1/2", 10).alpha0_inv() == 1);
  CHECK(P("0.75", 3).lambda() == mpq_class(3, 4));
  CHECK_THROWS_AS(P("3/2", 5), DomainError);
  CHECK_THROWS_AS(P("0", 5), DomainError);
  CHECK_THROWS_AS(P("1", 5), DomainError);
  CHECK_THROWS_AS(P("1/2", 0), DomainError);
}

TEST_CASE("exact coefficients on small cases") {
  CHECK(coeff_rational(P("1/2", 1), 0) == mpq_class(-1, 2));
  CHECK(coeff_rational(P("1/2", 1), 1) == mpq_class(3, 4));
  CHECK(coeff_rational(P("1/2", 2), 2) == mpq_class(3, 16));
  CHECK(coeff_rational(P("1/2", 10), 0) == mpq_class(1, 1024));
  // Frozen from repeated power-series multiplication in rational arithmetic.
  CHECK(coeff_rational(P("1/2", 8), 8) == mpq_class(4899, 65536));
  CHECK(coeff_rational(P("3/4", 5), 7) == mpq_class(1552635, 8388608));
  CHECK(coeff_rational(P("1/3", 7), 20) == mpq_class("38093762168/7625597484987"));
  CHECK(coeff_rational(P("1/4", 3), 5) == mpq_class(17595, 65536));
  CHECK_THROWS_AS(coeff_rational(P("1/2", 3), -1), DomainError);
}

TEST_CASE("coeff_exact honours the target and reports the route") {
  const auto params = P("1/2", 8);
  PrecisionPolicy policy = PrecisionPolicy::for_params(params, 1e-30);
  const Coefficient c = coeff_exact(params, 8, policy);
  CHECK(c.rational);
  CHECK(c.abs_error <= 1e-30);
  CHECK(std::fabs(c.value.to_double() - 4899.0 / 65536) < 1e-17);
}

TEST_CASE("multiprecision route agrees with the rational route") {
  for (const char* l : {"1/4", "1/2", "3/4", "2/7"}) {
    for (long n : {1L, 5L, 40L}) {
      const auto params = P(l, n);
      const PrecisionPolicy policy = PrecisionPolicy::for_params(params, 1e-25);
      for (long k : {0L, 1L, n, 3 * n, 6 * n + 1}) {
        const Coefficient mp = coeff_multiprecision(params, k, policy);
        const hp::Real exact = hp::Real::from_mpq(coeff_rational(params, k), 256);
        const double err = hp::abs(mp.value - exact).to_double();
        CHECK(err <= mp.abs_error);
        CHECK(mp.abs_error <= 1e-25);
        CHECK_FALSE(mp.rational);
      }
    }
  }
}

TEST_CASE("multiprecision route reports exhaustion") {
  const auto params = P("9/10", 200);
  PrecisionPolicy policy;
  policy.start_bits = 64;
  policy.max_bits = 128;
  CHECK_THROWS_AS(coeff_multiprecision(params, 300, policy), PrecisionExhausted);
  policy.max_bits = 32;
  CHECK_THROWS_AS(policy.validate(), DomainError);
}

TEST_CASE("start bits cover the cancellation") {
  CHECK(default_start_bits(P("1/2", 10)) == 64 + 16);  // 10·log2 3 = 15.85
  CHECK(PrecisionPolicy::for_params(P("1/2", 10)).start_bits == 80);
}

TEST_CASE("exact series") {
  const auto s1 = coeff_series_exact(P("2/5", 1), 0);
  REQUIRE(s1.values.size() == 1);
  CHECK(s1[0] == -0.4);

  const auto s = coeff_series_exact(P("1/2", 2), 2);
  CHECK(s.engine == Engine::exact);
  CHECK(s[0] == 0.25);
  CHECK(s[1] == -0.75);
  CHECK(s[2] == 0.1875);

  const auto params = P("3/7", 13);
  const auto big = coeff_series_exact(params, 120);
  for (long k = 0; k <= 120; k += 7)
    CHECK(big[k] == hp::Real::from_mpq(coeff_rational(params, k), 53).to_double());
  CHECK_THROWS_AS(coeff_series_exact(params, -1), DomainError);
}

TEST_CASE("coefficient sum approaches B(1) = 1") {
  const auto params = P("1/2", 6);
  double previous = 1e300;
  for (long kmax : {20L, 40L, 80L, 160L}) {
    const auto s = coeff_series_exact(params, kmax);
    double sum = 0;
    for (double v : s.values) sum += v;
    const double r = std::fabs(sum - 1);
    CHECK(r <= previous);
    previous = r;
  }
  CHECK(previous < 1e-14);
}

TEST_CASE("fft engine") {
  const auto params = P("1/2", 1);
  const auto fft = coeff_series_fft(params, 4, 64);
  CHECK(fft.engine == Engine::fft);
  for (long k = 0; k <= 4; ++k) CHECK(std::fabs(fft[k] - coeff_rational(params, k).get_d()) <= 1e-12);
  CHECK(fft.max_discarded_imag <= 1e-12);

  const auto p64 = P("1/2", 64);
  const auto a = coeff_series_fft(p64, 256, 2048);
  const auto b = coeff_series_fft(p64, 256, 4096);
  double diff = 0;
  for (long k = 0; k <= 256; ++k) diff = std::max(diff, std::fabs(a[k] - b[k]));
  CHECK(diff <= 1e-10);

  CHECK_THROWS_AS(coeff_series_fft(p64, 256, 512), GridTooSmall);
  CHECK_THROWS_AS(coeff_series_fft(p64, 100, 3000), GridTooSmall);
  // 2·kmax+2 holds but the aliasing bound does not.
  CHECK_THROWS_AS(coeff_series_fft(p64, 10, 128), GridTooSmall);
}

TEST_CASE("fft resolution floor") {
  const auto params = P("1/2", 32);
  const auto s = coeff_series_fft(params, default_kmax(params));
  CHECK(s.resolution_floor == 1e-12);
  CHECK(s.below_resolution(s.kmax));
  CHECK_FALSE(s.below_resolution(96));
}

TEST_CASE("defaults") {
  const auto params = P("1/2", 100);
  CHECK(default_kmax(params) == 600);
  CHECK(default_fft_grid(params) == 4096);  // 8·300 = 2400
}

TEST_CASE("oscillatory engine") {
  const auto r0 = coeff_oscillatory(P("1/2", 1), 0);
  CHECK(std::fabs(r0.value + 0.5) <= 1e-10);
  CHECK(r0.panels > 0);

  const auto r = coeff_oscillatory(P("1/2", 8), 8);
  CHECK(std::fabs(r.value - 4899.0 / 65536) <= 1e-10);
  CHECK(r.error_estimate <= 1e-10);

  const auto params = P("1/2", 100);
  const auto fft = coeff_series_fft(params, 300);
  CHECK(std::fabs(coeff_oscillatory(params, 300).value - fft[300]) <= 1e-8);

  OscillatoryOptions tight;
  tight.max_panels = 4;
  CHECK_THROWS_AS(coeff_oscillatory(params, 300, tight), NonConvergence);
  CHECK_THROWS_AS(coeff_oscillatory(params, -2), DomainError);
}

TEST_CASE("tail bound") {
  const auto params = P("1/2", 4);
  const auto s = coeff_series_exact(params, 400);
  double tail = 0;
  for (long k = 40; k <= 400; ++k) tail += std::fabs(s[k]);
  CHECK(tail_bound(params, 40) >= tail);
  CHECK(tail == doctest::Approx(8.200444202676035e-08).epsilon(1e-9));

  CHECK(std::isinf(tail_bound(params, 8)));
  CHECK(std::isinf(tail_bound(params, 12)));  // K = α₀⁻¹n exactly
  CHECK(std::isfinite(tail_bound(params, 13)));

  double previous = std::numeric_limits<double>::infinity();
  for (long K = 13; K < 5000; K += 37) {
    const double t = tail_bound(params, K);
    CHECK(t <= previous);
    previous = t;
  }
  CHECK(log_tail_bound(params, 100000) < -700);
  CHECK(tail_bound(params, 100000) > 0);
}

TEST_CASE("series identities") {
  for (const char* l : {"1/4", "1/2", "3/4"}) {
    const auto params = P(l, 24);
    for (const auto& s : {coeff_series_exact(params, default_kmax(params)),
                          coeff_series_fft(params, default_kmax(params))}) {
      const auto id = check_identities(s);
      CHECK(id.sum_residual <= id.tolerance);
      CHECK(id.alternating_residual <= id.tolerance);
      CHECK(id.plancherel_residual <= id.tolerance);
      CHECK(id.tolerance < 1e-9);
    }
  }
}

TEST_CASE("three engines agree") {
  for (const char* l : {"1/4", "1/2", "3/4"}) {
    for (long n : {1L, 7L, 16L, 64L}) {
      const auto params = P(l, n);
      const long kmax = 4 * n;
      const auto exact = coeff_series_exact(params, kmax);
      const auto fft = coeff_series_fft(params, kmax);
      const auto osc = coeff_series_oscillatory(params, kmax);
      CHECK(fft.max_discarded_imag <= 1e-12);
      for (long k = 0; k <= kmax; ++k) {
        CAPTURE(k);
        CHECK(std::fabs(exact[k] - fft[k]) <= 1e-9);
        CHECK(std::fabs(exact[k] - osc[k]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("constant coefficient is (-lambda)^n") {
  for (const char* l : {"1/4", "2/3", "5/11"}) {
    for (long n : {1L, 2L, 9L, 30L}) {
      const auto params = P(l, n);
      mpq_class expected;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), params.num().get_mpz_t(), static_cast<unsigned long>(n));
      mpz_pow_ui(den.get_mpz_t(), params.den().get_mpz_t(), static_cast<unsigned long>(n));
      expected = mpq_class(n % 2 ? mpz_class(-num) : num, den);
      expected.canonicalize();
      CHECK(coeff_rational(params, 0) == expected);
    }
  }
}

}  // TEST_SUITE
