#pragma once

#include <gmpxx.h>

#include "blaschke/hp_real.hpp"

namespace blaschke {

/// λ ∈ (0,1) as an exact rational together with the power n of
/// B = ((z-λ)/(1-λz))^n. Only make_params constructs one, so every instance
/// satisfies the domain invariants.
class BlaschkeParams {
 public:
  const mpq_class& lambda() const { return lambda_; }
  long n() const { return n_; }
  /// λ rounded to 256 bits.
  const hp::Real& lambda_hp() const { return lambda_hp_; }
  double lambda_d() const { return lambda_d_; }

  /// Numerator p and denominator q of λ = p/q in lowest terms.
  const mpz_class& num() const { return lambda_.get_num(); }
  const mpz_class& den() const { return lambda_.get_den(); }

  /// α₀ = (1-λ)/(1+λ) and its inverse, exact.
  const mpq_class& alpha0() const { return alpha0_; }
  const mpq_class& alpha0_inv() const { return alpha0_inv_; }
  double alpha0_d() const { return alpha0_.get_d(); }
  double alpha0_inv_d() const { return alpha0_inv_.get_d(); }

 private:
  friend BlaschkeParams make_params(const mpq_class& lambda, long n);
  BlaschkeParams(const mpq_class& lambda, long n);

  mpq_class lambda_;
  long n_;
  hp::Real lambda_hp_;
  double lambda_d_;
  mpq_class alpha0_;
  mpq_class alpha0_inv_;
};

/// Throws DomainError unless 0 < λ < 1 and n ≥ 1.
BlaschkeParams make_params(const mpq_class& lambda, long n);

}  // namespace blaschke
