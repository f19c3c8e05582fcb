#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <utility>

namespace blaschke::hp {

/// Owning MPFR value with value semantics. Binary operations produce a result
/// at the larger of the operand precisions, rounded to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(double x, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_mpz(const mpz_class& z, mpfr_prec_t bits);
  static Real from_mpq(const mpq_class& q, mpfr_prec_t bits);
  static Real infinity(mpfr_prec_t bits = 53);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Rounds to the requested precision in place.
  void set_precision(mpfr_prec_t bits);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// ln|x| as a double; finite for any nonzero value regardless of exponent.
  double log_abs() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  std::string str(int digits = 20) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real abs(Real x);

}  // namespace blaschke::hp
