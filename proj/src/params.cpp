#include "blaschke/params.hpp"

#include <string>

#include "blaschke/errors.hpp"

namespace blaschke {

BlaschkeParams::BlaschkeParams(const mpq_class& lambda, long n)
    : lambda_(lambda),
      n_(n),
      lambda_hp_(hp::Real::from_mpq(lambda, 256)),
      lambda_d_(lambda.get_d()),
      alpha0_((1 - lambda) / (1 + lambda)),
      alpha0_inv_((1 + lambda) / (1 - lambda)) {
  alpha0_.canonicalize();
  alpha0_inv_.canonicalize();
}

BlaschkeParams make_params(const mpq_class& lambda, long n) {
  mpq_class l = lambda;
  l.canonicalize();
  if (l <= 0 || l >= 1) throw DomainError("lambda must lie in (0,1), got " + l.get_str());
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  return BlaschkeParams(l, n);
}

}  // namespace blaschke
