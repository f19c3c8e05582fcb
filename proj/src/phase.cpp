#include "blaschke/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "blaschke/boundary_phase.hpp"
#include "blaschke/errors.hpp"

namespace blaschke {

PhaseFunction::PhaseFunction(BlaschkeParams params, long k)
    : params_(std::move(params)), k_(k), ratio_(k, params_.n()) {
  if (k < 0) throw DomainError("coefficient index must be >= 0, got " + std::to_string(k));
  ratio_.canonicalize();
}

double PhaseFunction::value(double t) const {
  const auto lt = static_cast<long double>(t);
  const long double g = static_cast<long double>(params_.n()) *
                            boundary_angle(static_cast<long double>(params_.lambda_d()), lt) -
                        static_cast<long double>(k_) * lt;
  return static_cast<double>(g);
}

double PhaseFunction::slope(double t) const {
  return static_cast<double>(params_.n()) * boundary_angle_derivative(params_.lambda_d(), t) -
         static_cast<double>(k_);
}

double PhaseFunction::curvature(double t) const {
  return static_cast<double>(params_.n()) * boundary_angle_second_derivative(params_.lambda_d(), t);
}

double PhaseFunction::slope_at_zero() const {
  return mpq_class(params_.n() * params_.alpha0_inv() - k_).get_d();
}

double PhaseFunction::slope_at_pi() const { return mpq_class(params_.n() * params_.alpha0() - k_).get_d(); }

std::optional<double> stationary_point(const PhaseFunction& phase) {
  const auto& p = phase.params();
  const mpq_class& a = phase.ratio();
  if (a < p.alpha0() || a > p.alpha0_inv()) return std::nullopt;
  const mpq_class& l = p.lambda();
  mpq_class c = (a * (1 + l * l) - (1 - l * l)) / (2 * l * a);
  c.canonicalize();
  const double cd = std::clamp(c.get_d(), -1.0, 1.0);
  return std::acos(cd);
}

double g2_at_stationary(const PhaseFunction& phase) {
  if (!stationary_point(phase))
    throw PreconditionViolation("no stationary point for k=" + std::to_string(phase.k()) +
                                ", n=" + std::to_string(phase.params().n()));
  const auto& p = phase.params();
  const double left = mpq_class(phase.ratio() - p.alpha0()).get_d();
  const double right = mpq_class(p.alpha0_inv() - phase.ratio()).get_d();
  return static_cast<double>(phase.k()) * std::sqrt(left) * std::sqrt(right);
}

double vdc_bound(const PhaseFunction& phase, double a, double b) {
  if (!(0 <= a && a < b && b <= std::numbers::pi))
    throw PreconditionViolation("vdc_bound needs 0 <= a < b <= pi");
  // g' is strictly decreasing on [0, π], so its sign on [a, b] is fixed by
  // the endpoint values.
  const double ga = a == 0 ? phase.slope_at_zero() : phase.slope(a);
  const double gb = b == std::numbers::pi ? phase.slope_at_pi() : phase.slope(b);
  if (!(ga > 0 && gb > 0) && !(ga < 0 && gb < 0))
    throw PreconditionViolation("g' changes sign or vanishes on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  return 2 / std::fabs(ga) + 2 / std::fabs(gb);
}

}  // namespace blaschke
