#include "blaschke/hp_real.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace blaschke::hp {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double x, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

// Moved-from objects keep a valid 2-bit zero so destruction stays legal.
Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_set_zero(v_, 1);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_mpz(const mpz_class& z, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_mpq(const mpq_class& q, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::infinity(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_inf(r.v_, 1);
  return r;
}

void Real::set_precision(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

double Real::log_abs() const {
  if (mpfr_zero_p(v_)) return -HUGE_VAL;
  if (mpfr_inf_p(v_)) return HUGE_VAL;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::string Real::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

namespace {
mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, max_prec(*this, o), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

}  // namespace blaschke::hp
