#include <cmath>
#include <limits>
#include <string>

#include "blaschke/engines.hpp"
#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

constexpr long kRationalBitLimit = 1L << 24;

void require_k(long k) {
  if (k < 0) throw DomainError("coefficient index must be >= 0, got " + std::to_string(k));
}

long result_bits(double target_abs_error) {
  // |B̂(k)| ≤ 1, so a relative rounding of 2^{-bits} is an absolute one.
  const double need = target_abs_error > 0 ? -std::log2(target_abs_error) : 1024.0;
  return std::max<long>(64, static_cast<long>(std::ceil(need)) + 8);
}

// Numerator size bound in bits: q^{n+k} times the cancellation factor.
long estimated_numerator_bits(const BlaschkeParams& params, long k) {
  const long bp = static_cast<long>(mpz_sizeinbase(params.num().get_mpz_t(), 2));
  const long bq = static_cast<long>(mpz_sizeinbase(params.den().get_mpz_t(), 2));
  return (params.n() + k) * (bp + bq) + 2 * params.n() + 64;
}

// num/den correctly rounded to `bits`.
hp::Real rounded_ratio(const mpz_class& num, const mpz_class& den, long bits) {
  const auto exact_bits = static_cast<mpfr_prec_t>(std::max<std::size_t>(mpz_sizeinbase(num.get_mpz_t(), 2), 2));
  hp::Real x(exact_bits);
  mpfr_set_z(x.get(), num.get_mpz_t(), MPFR_RNDN);
  hp::Real r(static_cast<mpfr_prec_t>(bits));
  mpfr_div_z(r.get(), x.get(), den.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::exact: return "exact";
    case Engine::fft: return "fft";
    case Engine::oscillatory: return "oscillatory";
  }
  return "unknown";
}

bool CoefficientSeries::below_resolution(long k) const {
  return std::fabs(values[static_cast<std::size_t>(k)]) < resolution_floor;
}

long default_start_bits(const BlaschkeParams& params) {
  const double l = params.lambda_d();
  return 64 + static_cast<long>(std::ceil(static_cast<double>(params.n()) * std::log2((1 + l) / (1 - l))));
}

PrecisionPolicy PrecisionPolicy::for_params(const BlaschkeParams& params, double target_abs_error) {
  PrecisionPolicy p;
  p.target_abs_error = target_abs_error;
  p.start_bits = default_start_bits(params);
  p.max_bits = std::max(p.max_bits, 4 * p.start_bits);
  return p;
}

void PrecisionPolicy::validate() const {
  if (start_bits < 64) throw DomainError("start_bits must be >= 64");
  if (max_bits < start_bits) throw DomainError("max_bits must be >= start_bits");
  if (!(target_abs_error > 0)) throw DomainError("target_abs_error must be positive");
}

long default_kmax(const BlaschkeParams& params) {
  mpz_class k;
  const mpq_class x = 2 * params.n() * params.alpha0_inv();
  mpz_cdiv_q(k.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  long kmax = k.get_si();
  while (tail_bound(params, kmax + 1) > 1e-17) kmax *= 2;
  return kmax;
}

long default_fft_grid(const BlaschkeParams& params) {
  mpz_class m;
  const mpq_class x = params.n() * params.alpha0_inv();
  mpz_cdiv_q(m.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  const long want = 8 * m.get_si();
  long grid = 1;
  while (grid < want) grid <<= 1;
  return grid;
}

mpz_class exact_numerator(const BlaschkeParams& params, long k) {
  require_k(k);
  const long n = params.n();
  const mpz_class& p = params.num();
  const mpz_class& q = params.den();
  const mpz_class q2 = q * q;
  const mpz_class p2 = p * p;

  // term_0 = (-p)^n p^k C(n-1+k, n-1)
  mpz_class term;
  mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(n - 1 + k), static_cast<unsigned long>(n - 1));
  mpz_class ppow;
  mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n + k));
  term *= ppow;
  if (n % 2 != 0) term = -term;

  mpz_class sum = term;
  mpz_class den;
  const long jmax = std::min(n, k);
  // term_{j+1} = -term_j (n-j)(k-j) q² / ((j+1)(n-1+k-j) p²)
  for (long j = 0; j < jmax; ++j) {
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(n - j));
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k - j));
    term *= q2;
    den = p2;
    mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(j + 1));
    mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n - 1 + k - j));
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
    mpz_neg(term.get_mpz_t(), term.get_mpz_t());
    sum += term;
  }
  return sum;
}

mpq_class coeff_rational(const BlaschkeParams& params, long k) {
  mpz_class qpow;
  mpz_pow_ui(qpow.get_mpz_t(), params.den().get_mpz_t(), static_cast<unsigned long>(params.n() + k));
  mpq_class r(exact_numerator(params, k), qpow);
  r.canonicalize();
  return r;
}

namespace {

struct Evaluation {
  hp::Real value;
  hp::Real abs_terms;
};

// Same recurrence as exact_numerator, on B̂ directly at `bits` of precision.
Evaluation convolve_mp(const BlaschkeParams& params, long k, long bits) {
  const long n = params.n();
  const auto prec = static_cast<mpfr_prec_t>(bits);

  hp::Real lam = params.lambda_hp();
  lam.set_precision(prec);
  hp::Real inv_lam2(prec);
  mpfr_sqr(inv_lam2.get(), lam.get(), MPFR_RNDN);
  mpfr_ui_div(inv_lam2.get(), 1, inv_lam2.get(), MPFR_RNDN);

  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1 + k), static_cast<unsigned long>(n - 1));
  hp::Real term = hp::Real::from_mpz(binom, prec);
  hp::Real lpow(prec);
  mpfr_pow_ui(lpow.get(), lam.get(), static_cast<unsigned long>(n + k), MPFR_RNDN);
  term *= lpow;
  if (n % 2 != 0) term = -term;

  hp::Real sum = term;
  hp::Real abs_sum(64);
  mpfr_abs(abs_sum.get(), term.get(), MPFR_RNDU);
  hp::Real tmp(64);

  const long jmax = std::min(n, k);
  for (long j = 0; j < jmax; ++j) {
    mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(n - j), MPFR_RNDN);
    mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(k - j), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(j + 1), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n - 1 + k - j), MPFR_RNDN);
    term *= inv_lam2;
    mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    sum += term;
    mpfr_abs(tmp.get(), term.get(), MPFR_RNDU);
    mpfr_add(abs_sum.get(), abs_sum.get(), tmp.get(), MPFR_RNDU);
  }
  return {std::move(sum), std::move(abs_sum)};
}

// Term j carries at most 6j+2 relative roundings and each addition one more,
// so (8J+16)·2^{-bits}·Σ|terms| bounds the rounding error of J terms.
double a_priori_error(const hp::Real& abs_terms, long terms, long bits) {
  const double scale = static_cast<double>(8 * terms + 16);
  const double log_err = abs_terms.log_abs() + std::log(scale) - static_cast<double>(bits) * std::log(2.0);
  return std::exp(log_err);
}

}  // namespace

Coefficient coeff_multiprecision(const BlaschkeParams& params, long k, const PrecisionPolicy& policy) {
  require_k(k);
  policy.validate();
  const long terms = std::min(params.n(), k) + 1;

  long bits = policy.start_bits;
  Evaluation previous = convolve_mp(params, k, bits);
  while (true) {
    const long next_bits = 2 * bits;
    if (next_bits > policy.max_bits)
      throw PrecisionExhausted("precision limit of " + std::to_string(policy.max_bits) +
                               " bits reached before |error| <= " + std::to_string(policy.target_abs_error) +
                               " for k=" + std::to_string(k));
    Evaluation current = convolve_mp(params, k, next_bits);
    const double diff = hp::abs(current.value - previous.value).to_double();
    const double err = diff + a_priori_error(current.abs_terms, terms, next_bits);
    if (err <= policy.target_abs_error) {
      const long out_bits = std::min(result_bits(policy.target_abs_error), next_bits);
      Coefficient c{std::move(current.value), err, false, out_bits};
      c.value.set_precision(static_cast<mpfr_prec_t>(out_bits));
      c.abs_error += std::ldexp(1.0, -static_cast<int>(std::min<long>(out_bits, 1000)));
      return c;
    }
    previous = std::move(current);
    bits = next_bits;
  }
}

Coefficient coeff_exact(const BlaschkeParams& params, long k, const PrecisionPolicy& policy) {
  require_k(k);
  policy.validate();
  if (estimated_numerator_bits(params, k) > kRationalBitLimit) return coeff_multiprecision(params, k, policy);

  const long bits = result_bits(policy.target_abs_error);
  mpz_class qpow;
  mpz_pow_ui(qpow.get_mpz_t(), params.den().get_mpz_t(), static_cast<unsigned long>(params.n() + k));
  hp::Real value = rounded_ratio(exact_numerator(params, k), qpow, bits);
  // One correctly rounded division and |B̂(k)| ≤ 1.
  const double err = std::ldexp(1.0, -static_cast<int>(std::min<long>(bits, 1000)));
  return Coefficient{std::move(value), err, true, bits};
}

CoefficientSeries coeff_series_exact(const BlaschkeParams& params, long kmax, const PrecisionPolicy& policy) {
  if (kmax < 0) throw DomainError("kmax must be >= 0");
  policy.validate();
  const long n = params.n();
  const mpz_class& p = params.num();
  const mpz_class& q = params.den();

  CoefficientSeries s(params);
  s.kmax = kmax;
  s.engine = Engine::exact;
  s.values.resize(static_cast<std::size_t>(kmax + 1));
  s.log_abs.resize(static_cast<std::size_t>(kmax + 1));

  // N_m = q^{n+m} B̂(m) satisfies, from (z-λ)(1-λz)B' = n(1-λ²)B,
  //   p(m+1) N_{m+1} = ((q²+p²)m - n(q²-p²)) N_m - p q² (m-1) N_{m-1},
  // with every division exact.
  const mpz_class a = q * q + p * p;
  const mpz_class b = n * (q * q - p * p);
  const mpz_class pq2 = p * q * q;

  mpz_class qpow;
  mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));

  mpz_class prev;  // N_{m-1}
  mpz_class cur;   // N_m
  mpz_pow_ui(cur.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
  if (n % 2 != 0) cur = -cur;
  mpz_class next, t, d;

  double max_abs = 0;
  for (long m = 0; m <= kmax; ++m) {
    const hp::Real c = rounded_ratio(cur, qpow, 53);
    const double v = c.to_double();
    s.values[static_cast<std::size_t>(m)] = v;
    s.log_abs[static_cast<std::size_t>(m)] = c.is_zero() ? -std::numeric_limits<double>::infinity() : c.log_abs();
    max_abs = std::max(max_abs, std::fabs(v));
    if (m == kmax) break;

    t = a * m - b;
    next = t * cur;
    if (m >= 1) {
      t = pq2 * (m - 1);
      next -= t * prev;
    }
    d = p * (m + 1);
    mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), d.get_mpz_t());
    prev.swap(cur);
    cur.swap(next);
    qpow *= q;
  }
  s.achieved_abs_error = max_abs * std::numeric_limits<double>::epsilon();
  return s;
}

}  // namespace blaschke
