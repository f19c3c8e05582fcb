#include "blaschke/weyl.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "blaschke/engines.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/hp_real.hpp"
#include "blaschke/kernels.hpp"

namespace blaschke {

namespace {

constexpr mpfr_prec_t kBits = 256;

struct Window {
  long first = 0;
  long last = 0;
};

// ⌈α₀⁻¹n - n^{3/4}⌉ .. ⌊α₀⁻¹n - √n⌋
Window airy_window(const BlaschkeParams& params) {
  const long n = params.n();
  const hp::Real top = hp::Real::from_mpq(params.alpha0_inv() * n, kBits);
  hp::Real nr(static_cast<double>(n), kBits), root(kBits), r34(kBits), tmp(kBits);
  mpfr_sqrt(root.get(), nr.get(), MPFR_RNDN);
  mpfr_sqrt(r34.get(), root.get(), MPFR_RNDN);
  mpfr_mul(r34.get(), r34.get(), root.get(), MPFR_RNDN);

  Window w;
  mpfr_sub(tmp.get(), top.get(), r34.get(), MPFR_RNDN);
  mpfr_ceil(tmp.get(), tmp.get());
  w.first = mpfr_get_si(tmp.get(), MPFR_RNDN);
  mpfr_sub(tmp.get(), top.get(), root.get(), MPFR_RNDN);
  mpfr_floor(tmp.get(), tmp.get());
  w.last = mpfr_get_si(tmp.get(), MPFR_RNDN);
  return w;
}

}  // namespace

WeylExperiment weyl_sums(const mpq_class& lambda, long n, long j) {
  if (j == 0) throw DomainError("Weyl sums need j != 0");
  const auto params = make_params(lambda, n);
  const Window w = airy_window(params);
  if (w.last < w.first)
    throw PreconditionViolation("empty window for n=" + std::to_string(n) + "; use n >= 4096");

  // offset = α₀⁻¹n split into integer and fractional parts, so long double
  // keeps every digit of d = offset - k.
  const mpq_class top = params.alpha0_inv() * n;
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  const mpq_class frac = top - whole;
  const long double offset = static_cast<long double>(whole.get_si()) + static_cast<long double>(frac.get_d());

  // scale = (2/(3π))(1-λ)^{3/2}/(λ(1+λ))^{1/2}/√n
  hp::Real lam = params.lambda_hp();
  hp::Real one_minus(kBits), lam_scale(kBits), c(kBits), pi(kBits), nr(static_cast<double>(n), kBits);
  mpfr_ui_sub(one_minus.get(), 1, lam.get(), MPFR_RNDN);
  mpfr_add_ui(lam_scale.get(), lam.get(), 1, MPFR_RNDN);
  mpfr_mul(lam_scale.get(), lam_scale.get(), lam.get(), MPFR_RNDN);
  mpfr_sqrt(c.get(), one_minus.get(), MPFR_RNDN);
  mpfr_mul(c.get(), c.get(), one_minus.get(), MPFR_RNDN);
  mpfr_sqrt(lam_scale.get(), lam_scale.get(), MPFR_RNDN);
  mpfr_div(c.get(), c.get(), lam_scale.get(), MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_mul_ui(pi.get(), pi.get(), 3, MPFR_RNDN);
  mpfr_mul_ui(c.get(), c.get(), 2, MPFR_RNDN);
  mpfr_div(c.get(), c.get(), pi.get(), MPFR_RNDN);
  mpfr_sqrt(nr.get(), nr.get(), MPFR_RNDN);
  mpfr_div(c.get(), c.get(), nr.get(), MPFR_RNDN);
  const long double scale = mpfr_get_ld(c.get(), MPFR_RNDN);

  WeylExperiment e;
  e.lambda = lambda;
  e.n = n;
  e.j = j;
  e.k_first = w.first;
  e.k_last = w.last;
  e.s_values = kernels::weyl_fractional_parts(w.first, w.last - w.first + 1, offset, scale);

  std::complex<double> acc = 0;
  e.partial_sums.reserve(e.s_values.size());
  for (double s : e.s_values) {
    const double js = static_cast<double>(j) * s;
    const double angle = 2 * std::numbers::pi * (js - std::floor(js));
    acc += std::polar(1.0, angle);
    e.partial_sums.push_back(acc);
    e.max_abs_A = std::max(e.max_abs_A, std::abs(acc));
  }
  return e;
}

std::vector<long> histogram(const std::vector<double>& values, int bins) {
  if (bins < 1) throw DomainError("histogram needs at least one bin");
  std::vector<long> h(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    auto b = static_cast<long>(std::floor(v * bins));
    b = std::clamp(b, 0L, static_cast<long>(bins) - 1);
    ++h[static_cast<std::size_t>(b)];
  }
  return h;
}

AiryRegimeMass airy_regime_mass(const mpq_class& lambda, long n) {
  if (n < 1024) throw PreconditionViolation("airy_regime_mass needs n >= 1024");
  const auto params = make_params(lambda, n);
  const Window w = airy_window(params);
  const auto series = coeff_series_fft(params, default_kmax(params));

  AiryRegimeMass r;
  r.k_first = w.first;
  r.k_last = w.last;
  r.mass = kernels::power_sum({series.values.data() + w.first, static_cast<std::size_t>(w.last - w.first + 1)}, 4);
  r.total = kernels::power_sum(series.values, 4);
  const double nd = static_cast<double>(n);
  r.ratio = r.mass / (std::log(nd) / nd);
  return r;
}

}  // namespace blaschke
