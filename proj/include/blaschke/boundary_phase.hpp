#pragma once

#include <cmath>

namespace blaschke {

// b_λ(e^{it}) = e^{i f_λ(t)} with f_λ continuous, odd, f_λ(0) = 0, f_λ(π) = π.
// Both forms avoid the cancellation in 1 + λ² - 2λcos t for λ near 1.

template <class Float>
Float boundary_angle(Float lambda, Float t) {
  using std::atan2;
  using std::cos;
  using std::sin;
  return t + 2 * atan2(lambda * sin(t), 1 - lambda * cos(t));
}

/// f_λ'(t) = (1-λ²)/(1+λ²-2λcos t).
inline double boundary_angle_derivative(double lambda, double t) {
  const double s = std::sin(0.5 * t);
  const double denom = (1 - lambda) * (1 - lambda) + 4 * lambda * s * s;
  return (1 - lambda * lambda) / denom;
}

/// f_λ''(t) = -2λ(1-λ²) sin t / (1+λ²-2λcos t)².
inline double boundary_angle_second_derivative(double lambda, double t) {
  const double s = std::sin(0.5 * t);
  const double denom = (1 - lambda) * (1 - lambda) + 4 * lambda * s * s;
  return -2 * lambda * (1 - lambda * lambda) * std::sin(t) / (denom * denom);
}

}  // namespace blaschke
