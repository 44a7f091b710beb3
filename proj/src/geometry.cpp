#include "s2g/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace s2g {

SphereSpec::SphereSpec(unsigned N_, double a_) : N(N_), a(a_) {
  if (N < 1) throw std::invalid_argument("SphereSpec: N must be >= 1");
  if (!(a > 0) || !std::isfinite(a)) throw std::invalid_argument("SphereSpec: radius must be positive");
}

GaussSpec::GaussSpec(unsigned n_, double alpha_) : n(n_), alpha(alpha_) {
  if (n < 1) throw std::invalid_argument("GaussSpec: n must be >= 1");
  if (!(alpha > 0) || !std::isfinite(alpha)) throw std::invalid_argument("GaussSpec: alpha must be positive");
}

double log_normalization_Z(const SphereSpec& spec) {
  const double N = spec.N;
  return std::log(spec.a) + 0.5 * std::log(std::numbers::pi) + std::lgamma(N / 2) -
         std::lgamma((N + 1) / 2);
}

namespace {

// (N/2 - 1) log(1 - r^2/a^2) without forming 1 - r^2/a^2 when it is tiny.
double log_s_power(unsigned N, double a, double r) {
  const double u = r / a;
  const double exponent = 0.5 * N - 1.0;
  if (exponent == 0.0) return 0.0;
  return exponent * std::log1p(-u * u);
}

}  // namespace

LogReal log_weight_sphere(const SphereSpec& spec, double r) {
  if (std::abs(r) >= spec.a) return LogReal::zero();
  return LogReal::from_log(log_s_power(spec.N, spec.a, r) - log_normalization_Z(spec));
}

LogReal log_weight_gauss(double alpha, double r) {
  const double z = r / alpha;
  return LogReal::from_log(-0.5 * z * z - std::log(alpha) - 0.5 * std::log(2 * std::numbers::pi));
}

WeightProfile::WeightProfile(const SphereSpec& spec, double alpha)
    : spec_(spec), alpha_(alpha), log_Z_(log_normalization_Z(spec)) {
  if (!(alpha > 0)) throw std::invalid_argument("WeightProfile: alpha must be positive");
}

LogReal WeightProfile::sphere(double r) const {
  if (std::abs(r) >= spec_.a) return LogReal::zero();
  return LogReal::from_log(log_s_power(spec_.N, spec_.a, r) - log_Z_);
}

double sphere_volume_log(unsigned N, double a) {
  if (!(a > 0)) throw std::invalid_argument("sphere_volume_log: needs a > 0");
  const double Np1 = N + 1.0;
  return std::log(2.0) + 0.5 * Np1 * std::log(std::numbers::pi) + N * std::log(a) -
         std::lgamma(0.5 * Np1);
}

VarpiResult varpi_and_A(const SphereSpec& spec, double alpha) {
  if (spec.N < 3) throw std::invalid_argument("varpi_and_A: requires N >= 3");
  const WeightProfile w(spec, alpha);
  const double a = spec.a;
  const double A = (a * a - alpha * alpha * (spec.N - 2.0)) / a;
  auto log_ratio = [&](double r) { return w.sphere(r).log() - w.gauss(r).log(); };
  VarpiResult out{};
  out.A = A;
  out.log_ratio_at_zero = log_ratio(0.0);
  if (A <= 0) {
    out.r_star = 0.0;
  } else {
    out.r_star = std::sqrt(a * A);
    if (out.r_star >= a) throw std::domain_error("varpi_and_A: maximizer outside the sphere");
  }
  out.log_varpi = log_ratio(out.r_star);
  return out;
}

LogReal log_omega_density(unsigned N, double a, double alpha, std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0 || n >= N) throw std::invalid_argument("omega_density: requires 1 <= n < N");
  double x2 = 0.0;
  for (double xi : x) x2 += xi * xi;
  const double u = x2 / (a * a);
  if (u >= 1.0) return LogReal::zero();
  const double p = 0.5 * (static_cast<double>(N) - n - 1.0);
  const double log_s = p == 0.0 ? 0.0 : p * std::log1p(-u);
  return LogReal::from_log(log_s + 0.5 * n * std::log(2 * std::numbers::pi * alpha * alpha) +
                           x2 / (2 * alpha * alpha));
}

double omega_density(unsigned N, double a, double alpha, std::span<const double> x) {
  return log_omega_density(N, a, alpha, x).value();
}

}  // namespace s2g
