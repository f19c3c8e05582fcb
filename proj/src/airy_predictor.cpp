#include "blaschke/airy_predictor.hpp"

#include <cmath>
#include <limits>

#include "blaschke/airy.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/kernels.hpp"

namespace blaschke {

namespace {

// Everything except the Airy evaluation itself.
AiryPrediction prepare(const BlaschkeParams& params, long k) {
  const long n = params.n();
  const double nd = static_cast<double>(n);
  const double lam = params.lambda_d();
  const mpq_class alpha(k, n);
  const mpq_class gap = params.alpha0_inv() - alpha;  // α₀⁻¹ - α
  const mpq_class above = alpha - params.alpha0();    // α - α₀

  AiryPrediction r;
  r.k = k;
  r.alpha = alpha.get_d();
  const double lam_scale = lam * (1 + lam);  // λ(1+λ)
  r.gamma2 = gap.get_d() * (1 - lam) / std::cbrt(lam_scale);
  r.delta2 = r.gamma2;
  r.a0 = above > 0 ? std::pow(1 - lam, 0.25) / std::pow(lam_scale, 1.0 / 12) * std::sqrt(2.0) /
                         (std::sqrt(r.alpha) * std::pow(above.get_d(), 0.25))
                   : std::numeric_limits<double>::quiet_NaN();
  r.a1 = 0;
  r.airy_argument = -std::pow(nd, 2.0 / 3) * r.delta2;

  // α₀⁻¹n - n^{3/4} ≤ k ≤ α₀⁻¹n, decided exactly via (α₀⁻¹n - k)^4 ≤ n³.
  const mpq_class d = params.alpha0_inv() * n - k;
  r.in_window = d >= 0 && d * d * d * d <= mpq_class(n) * n * n;
  return r;
}

void finish(AiryPrediction& r, double ai, long n) {
  r.predicted = r.a0 * ai / std::cbrt(static_cast<double>(n));
}

}  // namespace

AiryPrediction airy_predict(const BlaschkeParams& params, long k) {
  if (k < 0) throw DomainError("coefficient index must be >= 0");
  AiryPrediction r = prepare(params, k);
  finish(r, airy_ai(r.airy_argument), params.n());
  return r;
}

std::vector<AiryPrediction> airy_predict_range(const BlaschkeParams& params, long k_first, long k_last) {
  if (k_first < 0 || k_last < k_first) throw DomainError("invalid k range for predictions");
  std::vector<AiryPrediction> out;
  out.reserve(static_cast<std::size_t>(k_last - k_first + 1));
  std::vector<double> args;
  args.reserve(out.capacity());
  for (long k = k_first; k <= k_last; ++k) {
    out.push_back(prepare(params, k));
    args.push_back(out.back().airy_argument);
  }
  const std::vector<double> ai = kernels::airy_values(args);
  for (std::size_t i = 0; i < out.size(); ++i) finish(out[i], ai[i], params.n());
  return out;
}

double boundary_constant(const BlaschkeParams& params) {
  const double lam = params.lambda_d();
  return (1 - lam) / (std::cbrt(lam * (1 + lam)) * std::pow(3.0, 2.0 / 3) * std::tgamma(2.0 / 3));
}

SupCoefficient sup_coefficient(const CoefficientSeries& series) {
  SupCoefficient s;
  for (long k = 0; k <= series.kmax; ++k)
    if (std::fabs(series[k]) > std::fabs(s.value)) s = {k, series[k]};
  return s;
}

SupCoefficient sup_coefficient(const BlaschkeParams& params) {
  return sup_coefficient(coeff_series_fft(params, default_kmax(params)));
}

}  // namespace blaschke
