#include "blaschke/regions.hpp"

#include <mpfr.h>

#include <cmath>
#include <span>
#include <string>

#include "blaschke/errors.hpp"
#include "blaschke/hp_real.hpp"
#include "blaschke/kernels.hpp"

namespace blaschke {

namespace {

constexpr mpfr_prec_t kBits = 256;

long floor_of(const hp::Real& x) {
  hp::Real r(kBits);
  mpfr_floor(r.get(), x.get());
  return mpfr_get_si(r.get(), MPFR_RNDN);
}

long ceil_of(const hp::Real& x) {
  hp::Real r(kBits);
  mpfr_ceil(r.get(), x.get());
  return mpfr_get_si(r.get(), MPFR_RNDN);
}

long floor_q(const mpq_class& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

long ceil_q(const mpq_class& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

}  // namespace

std::string_view to_string(Region r) {
  static constexpr std::array<std::string_view, 7> names{"I", "II", "III", "IV", "V", "VI", "VII"};
  return names[static_cast<std::size_t>(r) - 1];
}

long RegionPartition::first(Region r) const {
  const auto i = static_cast<std::size_t>(r);
  return i == 1 ? 0 : boundaries[i - 2] + 1;
}

long RegionPartition::last(Region r) const {
  const auto i = static_cast<std::size_t>(r);
  return i == 7 ? kUnbounded : boundaries[i - 1];
}

Region RegionPartition::region_of(long k) const {
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    if (k <= boundaries[i]) return static_cast<Region>(i + 1);
  return Region::VII;
}

mpq_class default_region_alpha(const BlaschkeParams& params) {
  mpq_class a = params.alpha0() / 2;
  a.canonicalize();
  return a;
}

RegionPartition region_partition(const BlaschkeParams& params, const mpq_class& alpha) {
  if (alpha <= 0 || alpha >= params.alpha0())
    throw PreconditionViolation("region split alpha must lie in (0, alpha0), got " + alpha.get_str());

  const long n = params.n();
  hp::Real cube_root(kBits);
  mpfr_cbrt(cube_root.get(), hp::Real(static_cast<double>(n), kBits).get(), MPFR_RNDN);
  const hp::Real left = hp::Real::from_mpq(params.alpha0() * n, kBits);
  const hp::Real right = hp::Real::from_mpq(params.alpha0_inv() * n, kBits);

  RegionPartition part{params, alpha, {}};
  part.boundaries = {floor_q(alpha * n),
                     floor_of(left - cube_root),
                     ceil_of(left + cube_root),
                     floor_of(right - cube_root),
                     ceil_of(right + cube_root),
                     ceil_q(n / alpha)};
  for (std::size_t i = 1; i < part.boundaries.size(); ++i)
    if (part.boundaries[i] < part.boundaries[i - 1])
      throw OrderingError("region boundaries are not ordered for n=" + std::to_string(n) + " (b" +
                          std::to_string(i) + "=" + std::to_string(part.boundaries[i - 1]) + " > b" +
                          std::to_string(i + 1) + "=" + std::to_string(part.boundaries[i]) + ")");
  return part;
}

double region_mass(const CoefficientSeries& series, const RegionPartition& partition, Region region,
                   const Exponent& p) {
  if (partition.params.n() != series.params.n() || partition.params.lambda() != series.params.lambda())
    throw PreconditionViolation("partition and series belong to different parameters");
  const long lo = partition.first(region);
  long hi = partition.last(region);
  if (region != Region::VII && hi > series.kmax)
    throw InsufficientRange("region " + std::string(to_string(region)) + " ends at k=" + std::to_string(hi) +
                            " beyond kmax=" + std::to_string(series.kmax));
  hi = std::min(hi, series.kmax);
  if (lo > hi) return 0;
  const std::span<const double> slice(series.values.data() + lo, static_cast<std::size_t>(hi - lo + 1));
  if (p.is_infinite()) return kernels::max_abs(slice);
  return kernels::power_sum(slice, p.to_double());
}

}  // namespace blaschke
