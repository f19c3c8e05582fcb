#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "blaschke/boundary_phase.hpp"
#include "blaschke/engines.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/kernels.hpp"

namespace blaschke {

namespace {

constexpr int kOrder = 16;

struct GaussLegendre {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};

  GaussLegendre() {
    // Newton iteration on P_16 from the Chebyshev-like initial guesses.
    for (int i = 0; i < kOrder; ++i) {
      long double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
      long double dp = 0;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1, p1 = x;
        for (int m = 2; m <= kOrder; ++m) {
          const long double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L) break;
      }
      nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
      weights[static_cast<std::size_t>(i)] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre gl;
  return gl;
}

class Integrand {
 public:
  Integrand(const BlaschkeParams& params, long k)
      : lambda_(static_cast<long double>(params.lambda().get_d())),
        lambda_d_(params.lambda_d()),
        n_(params.n()),
        k_(k) {}

  double operator()(double t) const {
    const long double lt = t;
    const long double g = static_cast<long double>(n_) * boundary_angle(lambda_, lt) - static_cast<long double>(k_) * lt;
    return static_cast<double>(std::cos(g));
  }

  double slope(double t) const {
    return static_cast<double>(n_) * boundary_angle_derivative(lambda_d_, t) - static_cast<double>(k_);
  }

 private:
  long double lambda_;
  double lambda_d_;
  long n_;
  long k_;
};

double gauss(const Integrand& f, double a, double b) {
  const auto& gl = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0;
  for (int i = 0; i < kOrder; ++i) s += gl.weights[static_cast<std::size_t>(i)] * f(mid + half * gl.nodes[static_cast<std::size_t>(i)]);
  return s * half;
}

}  // namespace

OscillatoryResult coeff_oscillatory(const BlaschkeParams& params, long k, const OscillatoryOptions& options) {
  if (k < 0) throw DomainError("coefficient index must be >= 0, got " + std::to_string(k));
  const double pi = std::numbers::pi;
  const Integrand f(params, k);
  const double max_width = pi / 32;
  // Error budget per unit length, so the panels sum to the target after 1/π.
  const double density = options.target_abs_error;

  struct Panel {
    double a, b, whole;
  };
  std::vector<Panel> stack;
  OscillatoryResult r;
  double integral = 0;
  double error = 0;

  double t = 0;
  while (t < pi) {
    double w = std::min(max_width, pi / (1 + std::fabs(f.slope(t))));
    w = std::min(w, pi / (1 + std::fabs(f.slope(std::min(pi, t + 0.5 * w)))));
    const double b = (t + w >= pi - 1e-15) ? pi : t + w;
    stack.push_back({t, b, gauss(f, t, b)});
    while (!stack.empty()) {
      const Panel p = stack.back();
      stack.pop_back();
      const double m = 0.5 * (p.a + p.b);
      const double left = gauss(f, p.a, m);
      const double right = gauss(f, m, p.b);
      const double diff = std::fabs(left + right - p.whole);
      if (diff <= density * (p.b - p.a) || p.b - p.a < 1e-14) {
        integral += left + right;
        error += diff;
        ++r.panels;
        continue;
      }
      if (r.panels + static_cast<long>(stack.size()) + 2 > options.max_panels)
        throw NonConvergence("oscillatory quadrature exceeded " + std::to_string(options.max_panels) +
                             " panels for k=" + std::to_string(k));
      stack.push_back({m, p.b, right});
      stack.push_back({p.a, m, left});
    }
    if (r.panels > options.max_panels)
      throw NonConvergence("oscillatory quadrature exceeded " + std::to_string(options.max_panels) +
                           " panels for k=" + std::to_string(k));
    t = b;
  }
  r.value = integral / pi;
  r.error_estimate = error / pi;
  return r;
}

CoefficientSeries coeff_series_oscillatory(const BlaschkeParams& params, long kmax, const OscillatoryOptions& options) {
  if (kmax < 0) throw DomainError("kmax must be >= 0");
  std::vector<long> ks(static_cast<std::size_t>(kmax + 1));
  for (long k = 0; k <= kmax; ++k) ks[static_cast<std::size_t>(k)] = k;
  const auto results = kernels::oscillatory_values(params, ks, options);

  CoefficientSeries s(params);
  s.kmax = kmax;
  s.engine = Engine::oscillatory;
  s.values.resize(results.size());
  double err = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    s.values[i] = results[i].value;
    err = std::max(err, results[i].error_estimate);
  }
  s.achieved_abs_error = err;
  s.resolution_floor = options.target_abs_error;
  return s;
}

}  // namespace blaschke
