#include "blaschke/airy.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>

#include "blaschke/hp_real.hpp"

namespace blaschke {

namespace {

constexpr mpfr_prec_t kBits = 192;
constexpr double kSeriesLeft = -9;
constexpr double kSeriesRight = 6;

struct SeriesConstants {
  hp::Real ai0{kBits};       // Ai(0) = 1/(3^{2/3}Γ(2/3))
  hp::Real minus_ai1{kBits};  // -Ai'(0) = 1/(3^{1/3}Γ(1/3))

  SeriesConstants() {
    hp::Real third(kBits), g(kBits), c(kBits);
    mpfr_set_ui(third.get(), 1, MPFR_RNDN);
    mpfr_div_ui(third.get(), third.get(), 3, MPFR_RNDN);

    mpfr_ui_sub(g.get(), 1, third.get(), MPFR_RNDN);
    mpfr_gamma(g.get(), g.get(), MPFR_RNDN);
    mpfr_ui_sub(c.get(), 1, third.get(), MPFR_RNDN);
    mpfr_ui_pow(c.get(), 3, c.get(), MPFR_RNDN);
    mpfr_mul(c.get(), c.get(), g.get(), MPFR_RNDN);
    mpfr_ui_div(ai0.get(), 1, c.get(), MPFR_RNDN);

    mpfr_gamma(g.get(), third.get(), MPFR_RNDN);
    mpfr_ui_pow(c.get(), 3, third.get(), MPFR_RNDN);
    mpfr_mul(c.get(), c.get(), g.get(), MPFR_RNDN);
    mpfr_ui_div(minus_ai1.get(), 1, c.get(), MPFR_RNDN);
  }
};

const SeriesConstants& constants() {
  static const SeriesConstants c;
  return c;
}

// Ai(x) = Ai(0)·f(x) + Ai'(0)·g(x) with
//   f = Σ 1·4···(3k-2) x^{3k}/(3k)!,  g = Σ 2·5···(3k-1) x^{3k+1}/(3k+1)!.
double maclaurin(double x) {
  const auto& c = constants();
  hp::Real xr(x, kBits), x3(kBits), tf(kBits), tg(kBits), f(kBits), g(kBits), eps(kBits);
  mpfr_pow_ui(x3.get(), xr.get(), 3, MPFR_RNDN);
  mpfr_set_ui(tf.get(), 1, MPFR_RNDN);
  mpfr_set(tg.get(), xr.get(), MPFR_RNDN);
  mpfr_set(f.get(), tf.get(), MPFR_RNDN);
  mpfr_set(g.get(), tg.get(), MPFR_RNDN);
  for (unsigned long k = 0; k < 400; ++k) {
    mpfr_mul(tf.get(), tf.get(), x3.get(), MPFR_RNDN);
    mpfr_div_ui(tf.get(), tf.get(), (3 * k + 2) * (3 * k + 3), MPFR_RNDN);
    mpfr_mul(tg.get(), tg.get(), x3.get(), MPFR_RNDN);
    mpfr_div_ui(tg.get(), tg.get(), (3 * k + 3) * (3 * k + 4), MPFR_RNDN);
    mpfr_add(f.get(), f.get(), tf.get(), MPFR_RNDN);
    mpfr_add(g.get(), g.get(), tg.get(), MPFR_RNDN);
    if (3 * k > std::fabs(x) * std::fabs(x) && std::fabs(tf.to_double()) + std::fabs(tg.to_double()) < 1e-40) break;
  }
  mpfr_mul(f.get(), f.get(), c.ai0.get(), MPFR_RNDN);
  mpfr_mul(g.get(), g.get(), c.minus_ai1.get(), MPFR_RNDN);
  mpfr_sub(f.get(), f.get(), g.get(), MPFR_RNDN);
  return f.to_double();
}

// u_k = Γ(3k+1/2)/(54^k k! Γ(k+1/2)), u_k/u_{k-1} = (6k-5)(6k-3)(6k-1)/(216 k (2k-1)).
double next_u(double u, int k) {
  return u * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
}

double decaying(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double sum = 1, term = 1, u = 1;
  for (int k = 1; k < 60; ++k) {
    u = next_u(u, k);
    const double t = u / std::pow(zeta, k);
    if (t > std::fabs(term)) break;
    term = (k % 2 == 0) ? t : -t;
    sum += term;
    if (t < 1e-18) break;
  }
  return std::exp(-zeta) / (2 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25)) * sum;
}

// Ai(-x) = π^{-1/2} x^{-1/4} [cos(ζ-π/4) Σ(-1)^k u_{2k}/ζ^{2k} + sin(ζ-π/4) Σ(-1)^k u_{2k+1}/ζ^{2k+1}].
double oscillating(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double even = 1, odd = 0, u = 1, last = 1;
  for (int k = 1; k < 80; ++k) {
    u = next_u(u, k);
    const double t = u / std::pow(zeta, k);
    if (t > last) break;
    last = t;
    const double sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0)
      even += sign * t;
    else
      odd += sign * t;
    if (t < 1e-18) break;
  }
  const double theta = zeta - std::numbers::pi / 4;
  return (std::cos(theta) * even + std::sin(theta) * odd) / (std::sqrt(std::numbers::pi) * std::pow(x, 0.25));
}

}  // namespace

double airy_ai(double x) {
  if (std::isnan(x)) return x;
  if (x > kSeriesRight) return decaying(x);
  if (x < kSeriesLeft) return oscillating(-x);
  return maclaurin(x);
}

double airy_ai_leading_negative(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  return std::cos(zeta - std::numbers::pi / 4) / (std::sqrt(std::numbers::pi) * std::pow(x, 0.25));
}

}  // namespace blaschke
