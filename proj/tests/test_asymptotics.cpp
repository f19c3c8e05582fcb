#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "blaschke/airy.hpp"
#include "blaschke/airy_predictor.hpp"
#include "blaschke/envelope.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/phase.hpp"

using namespace blaschke;

namespace {

BlaschkeParams P(const char* lambda, long n) { return make_params(parse_rational(lambda), n); }

// Ai to 20 digits, frozen from an independent arbitrary-precision evaluation.
const std::vector<std::pair<double, double>> kAiryTable = {
    {-20, -0.17640612707798468959},
    {-17.5, -0.17266059066222626782},
    {-15, 0.27821749087082892953},
    {-12.25, -0.26764469882714229824},
    {-10, 0.040241238486443190689},
    {-9.5, 0.31910324771912820138},
    {-9, -0.022133721547341403674},
    {-8.9, -0.11726630637175180866},
    {-7, 0.18428083525050563728},
    {-6, -0.32914517362982310523},
    {-5.2, 0.25258033810474462103},
    {-4, -0.070265532949289515099},
    {-2.338107410459767, 2.7433193406662829996e-17},
    {-1, 0.5355608832923521188},
    {-0.5, 0.4757280916105395888},
    {0, 0.35502805388781723926},
    {0.3, 0.27880648195500492466},
    {1, 0.13529241631288141552},
    {2.5, 0.015725923380470489995},
    {4, 0.00095156385120480187362},
    {5, 0.00010834442813607441735},
    {5.9, 0.000012747094509184476376},
    {6, 9.9476943602528895702e-6},
    {6.1, 7.7477310324484344432e-6},
    {7.5, 1.9172560675134307516e-7},
    {10, 1.1047532552898685934e-10},
};

double exact_at(const BlaschkeParams& params, long k) {
  return coeff_exact(params, k, PrecisionPolicy::for_params(params, 1e-20)).value.to_double();
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("airy reference values") {
  for (auto [x, ai] : kAiryTable) {
    CAPTURE(x);
    if (x <= 5)
      CHECK(std::fabs(airy_ai(x) - ai) <= 1e-12);
    else
      CHECK(airy_ai(x) == doctest::Approx(ai).epsilon(1e-10));
  }
}

TEST_CASE("airy special values") {
  CHECK(std::fabs(airy_ai(-2.33811)) <= 1e-5);
  CHECK(std::fabs(airy_ai(0) - 0.3550280539) <= 1e-9);
  CHECK(std::fabs(airy_ai(-10) - airy_ai_leading_negative(10)) <= 2e-3);
}

TEST_CASE("airy is continuous across method changes") {
  for (double x : {-9.0, 6.0}) {
    const double h = 1e-13;
    CHECK(std::fabs(airy_ai(x - h) - airy_ai(x + h)) <= 1e-12);
  }
}

TEST_CASE("airy oscillation remainder") {
  for (int i = 0; i <= 300; ++i) {
    const double x = 5 + 15.0 * i / 300;
    CAPTURE(x);
    CHECK(std::fabs(airy_ai(-x) - airy_ai_leading_negative(x)) <= 0.6 * std::pow(x, -1.75));
  }
}

TEST_CASE("airy satisfies Ai'' = x Ai") {
  for (double x = -19.5; x <= 4.5; x += 0.37) {
    const double h = 1e-3;
    const double d2 = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    CAPTURE(x);
    CHECK(std::fabs(d2 - x * airy_ai(x)) <= 1e-5 * (1 + std::fabs(x)));
  }
}

TEST_CASE("phase endpoint slopes") {
  for (const char* l : {"1/4", "1/2", "3/4", "5/9"}) {
    for (long n : {1L, 16L, 1000L}) {
      for (long k : {0L, n / 2, n, 3 * n, 7 * n}) {
        const PhaseFunction g(P(l, n), k);
        CHECK(g.slope(0) == doctest::Approx(g.slope_at_zero()).epsilon(1e-12));
        CHECK(g.slope(std::numbers::pi) == doctest::Approx(g.slope_at_pi()).epsilon(1e-12));
        for (int i = 1; i <= 100; ++i) CHECK(g.curvature(std::numbers::pi * i / 101) < 0);
      }
    }
  }
  const PhaseFunction g(P("1/2", 16), 4);
  CHECK(g.slope_at_zero() == 44);
  CHECK(g.slope_at_pi() == doctest::Approx(16.0 / 3 - 4));
}

TEST_CASE("stationary point") {
  CHECK(*stationary_point(PhaseFunction(P("1/2", 12), 36)) == 0);
  CHECK(*stationary_point(PhaseFunction(P("1/2", 12), 4)) == doctest::Approx(std::numbers::pi));
  CHECK(*stationary_point(PhaseFunction(P("1/2", 12), 12)) == doctest::Approx(std::numbers::pi / 3));
  CHECK_FALSE(stationary_point(PhaseFunction(P("1/2", 12), 3)).has_value());
  CHECK_FALSE(stationary_point(PhaseFunction(P("1/2", 12), 37)).has_value());

  for (const char* l : {"1/4", "1/2", "3/4"}) {
    const auto params = P(l, 500);
    for (long k = 0; k < 20 * 500; k += 97) {
      const PhaseFunction g(params, k);
      if (const auto phi = stationary_point(g)) {
        CHECK(std::fabs(g.slope(*phi)) <= 1e-10 * 500);
      }
    }
  }
}

TEST_CASE("second derivative at the stationary point") {
  const PhaseFunction g12(P("1/2", 12), 12);
  CHECK(g2_at_stationary(g12) == doctest::Approx(12 * std::sqrt(2.0 / 3) * std::sqrt(2.0)).epsilon(1e-14));

  for (const char* l : {"1/4", "1/2", "3/4"}) {
    const auto params = P(l, 300);
    for (long k = 0; k < 3000; k += 53) {
      const PhaseFunction g(params, k);
      const auto phi = stationary_point(g);
      if (!phi || *phi < 1e-3 || *phi > std::numbers::pi - 1e-3) continue;
      const double closed = g2_at_stationary(g);
      CHECK(std::fabs(g.curvature(*phi)) == doctest::Approx(closed).epsilon(1e-8));
      const double h = 1e-5;
      const double fd = (g.slope(*phi + h) - g.slope(*phi - h)) / (2 * h);
      CHECK(std::fabs(fd) == doctest::Approx(closed).epsilon(1e-6));
    }
  }
  CHECK(g2_at_stationary(PhaseFunction(P("1/2", 12), 36)) == 0);
  double previous = 1e300;
  for (long k = 3000; k <= 3600; k += 50) {
    const double v = g2_at_stationary(PhaseFunction(P("1/2", 1200), k)) / static_cast<double>(k);
    CHECK(v < previous);
    previous = v;
  }
  CHECK(previous == 0);
  CHECK_THROWS_AS(g2_at_stationary(PhaseFunction(P("1/2", 12), 2)), PreconditionViolation);
}

TEST_CASE("van der Corput bound") {
  const PhaseFunction g(P("1/2", 16), 4);
  CHECK(vdc_bound(g, 0, std::numbers::pi) == doctest::Approx(2.0 / 44 + 2.0 / (16.0 / 3 - 4)));

  for (const char* l : {"1/4", "1/2", "3/4"}) {
    for (long n : {8L, 40L}) {
      const auto params = P(l, n);
      for (long k = 0; k <= 8 * n; ++k) {
        const PhaseFunction ph(params, k);
        if (stationary_point(ph)) continue;
        const double integral = std::numbers::pi * std::fabs(coeff_oscillatory(params, k).value);
        CHECK(vdc_bound(ph, 0, std::numbers::pi) >= integral);
      }
    }
  }
  CHECK_THROWS_AS(vdc_bound(PhaseFunction(P("1/2", 12), 12), 0, std::numbers::pi), PreconditionViolation);
  CHECK_THROWS_AS(vdc_bound(g, 1, 0.5), PreconditionViolation);
}

TEST_CASE("envelope formulas") {
  const auto params = P("1/2", 1000);
  const mpq_class alpha(1, 6);
  const Envelope mid = decay_envelope(params, 333, alpha);
  CHECK(mid.region == Region::III);
  CHECK(mid.value() == doctest::Approx(0.1).epsilon(1e-14));

  const long k = 1666;  // ⌊βn⌋ with β = (α₀ + α₀⁻¹)/2 = 5/3
  const Envelope iv = decay_envelope(params, k, alpha);
  CHECK(iv.region == Region::IV);
  const double b = 1.666;
  CHECK(iv.value() == doctest::Approx(std::pow(1000.0, -0.5) * std::pow((b - 1.0 / 3) * (3 - b), -0.25)).epsilon(1e-12));

  CHECK(decay_envelope(params, 300, alpha).value() == doctest::Approx(1 / (1000.0 / 3 - 300)));
  CHECK(decay_envelope(params, 3100, alpha).value() == doctest::Approx(1.0 / 100));
  CHECK(decay_envelope(params, 3100, alpha).region == Region::VI);
}

TEST_CASE("exponential envelopes are rigorous bounds") {
  for (const char* l : {"1/4", "1/2", "3/4"}) {
    const auto params = P(l, 256);
    const auto part = region_partition(params, default_region_alpha(params));
    const long kmax = part.boundaries.back() + 400;
    const auto series = coeff_series_exact(params, kmax);
    for (long k = 0; k <= kmax; ++k) {
      const Envelope e = decay_envelope(part, k);
      if (e.region != Region::I && e.region != Region::VII) continue;
      CAPTURE(k);
      CHECK(series.log_abs[static_cast<std::size_t>(k)] <= e.log_value + 1e-9);
    }
  }
}

TEST_CASE("airy prediction fields") {
  const auto params = P("1/2", 4096);
  const long top = 3 * 4096;
  const AiryPrediction at = airy_predict(params, top);
  CHECK(at.gamma2 == 0);
  CHECK(at.delta2 == at.gamma2);
  CHECK(at.a1 == 0);
  CHECK(at.in_window);
  CHECK(at.predicted == doctest::Approx(boundary_constant(params) / std::cbrt(4096.0)).epsilon(1e-12));
  CHECK(boundary_constant(params) == doctest::Approx(0.195379467542369).epsilon(1e-12));

  CHECK(airy_predict(params, top - 512).in_window);   // n^{3/4} = 512
  CHECK_FALSE(airy_predict(params, top - 513).in_window);
  CHECK_FALSE(airy_predict(params, top + 1).in_window);
  CHECK(std::isnan(airy_predict(params, 1000).a0));

  const auto range = airy_predict_range(params, top - 40, top + 5);
  REQUIRE(range.size() == 46);
  for (const auto& r : range) {
    const auto single = airy_predict(params, r.k);
    CHECK(r.predicted == single.predicted);
    CHECK(r.gamma2 == r.delta2);
    CHECK(r.a1 == 0);
  }
}

TEST_CASE("airy prediction against exact coefficients") {
  const auto params = P("1/2", 4096);
  const long k = static_cast<long>(std::floor(3 * 4096 - std::pow(4096.0, 2.0 / 3)));
  const double exact = exact_at(params, k);
  const double predicted = airy_predict(params, k).predicted;
  CHECK(std::fabs(predicted - exact) / std::fabs(exact) <= 0.25);
}

TEST_CASE("airy prediction error shrinks at a fixed scaled position") {
  // k = ⌊α₀⁻¹n - c·n^{1/3}⌋ keeps the Airy argument fixed as n doubles.
  for (double c : {1.0, 2.0}) {
    std::vector<double> errors;
    for (long n : {1024L, 2048L, 4096L, 8192L}) {
      const auto params = P("1/2", n);
      const long k = static_cast<long>(std::floor(3.0 * n - c * std::cbrt(static_cast<double>(n))));
      const double exact = exact_at(params, k);
      errors.push_back(std::fabs(airy_predict(params, k).predicted - exact) / std::fabs(exact));
    }
    double mean_ratio = 0;
    for (std::size_t i = 1; i < errors.size(); ++i) {
      CHECK(errors[i] < errors[i - 1]);
      mean_ratio += errors[i] / errors[i - 1];
    }
    mean_ratio /= static_cast<double>(errors.size() - 1);
    CAPTURE(c);
    CHECK(mean_ratio <= std::pow(2.0, -1.0 / 3) + 0.15);
  }
}

TEST_CASE("boundary constant") {
  const auto params = P("1/2", 8192);
  const double scaled = exact_at(params, 3 * 8192) * std::cbrt(8192.0);
  CHECK(scaled == doctest::Approx(boundary_constant(params)).epsilon(0.1));
}

TEST_CASE("sup coefficient") {
  const auto tiny = sup_coefficient(P("1/1000", 3));
  CHECK(tiny.k == 3);
  CHECK(tiny.value == doctest::Approx(1).epsilon(1e-2));

  double lo = 1e300, hi = 0;
  for (long n = 256; n <= 4096; n *= 2) {
    const auto params = P("1/2", n);
    const auto s = sup_coefficient(params);
    const double scaled = std::fabs(s.value) * std::cbrt(static_cast<double>(n));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
    const auto part = region_partition(params, default_region_alpha(params));
    const Region r = part.region_of(s.k);
    CHECK((r == Region::III || r == Region::V));
    const double reach = 2 * std::cbrt(static_cast<double>(n));
    const long left = static_cast<long>(std::floor(n / 3.0));
    CHECK((std::labs(s.k - left) <= reach || std::labs(s.k - 3 * n) <= reach));
  }
  CHECK(hi / lo < 2);
}

}  // TEST_SUITE
