#pragma once

#include <span>

#include "s2g/log_real.hpp"

namespace s2g {

/// The round sphere S^N(a) in R^{N+1}.
struct SphereSpec {
  SphereSpec(unsigned N_, double a_);
  unsigned N;
  double a;
};

/// Gaussian measure on R^n with covariance alpha^2 I.
struct GaussSpec {
  GaussSpec(unsigned n_, double alpha_);
  unsigned n;
  double alpha;
};

/// log of Z = int_{-a}^{a} (1 - r^2/a^2)^{N/2-1} dr = a sqrt(pi) Gamma(N/2) / Gamma((N+1)/2).
double log_normalization_Z(const SphereSpec& spec);

/// log w_N(r); -inf for |r| >= a.
LogReal log_weight_sphere(const SphereSpec& spec, double r);

/// Density of N(0, alpha^2) on the line.
LogReal log_weight_gauss(double alpha, double r);

/// Pair (w_N, w_inf) with the normalizer cached.
class WeightProfile {
 public:
  WeightProfile(const SphereSpec& spec, double alpha);

  const SphereSpec& spec() const { return spec_; }
  double alpha() const { return alpha_; }
  double log_Z() const { return log_Z_; }

  LogReal sphere(double r) const;
  LogReal gauss(double r) const { return log_weight_gauss(alpha_, r); }
  /// s_N(r) = 1 - r^2/a^2.
  double s(double r) const { return 1.0 - (r / spec_.a) * (r / spec_.a); }

 private:
  SphereSpec spec_;
  double alpha_;
  double log_Z_;
};

/// log vol(S^N(a)); N = 0 gives log 2 (two points).
double sphere_volume_log(unsigned N, double a);

struct VarpiResult {
  double log_varpi;  ///< log sup_r w_N(r)/w_inf(r)
  double A;          ///< (a^2 - alpha^2 (N-2)) / a
  double r_star;     ///< a maximizer of w_N/w_inf on [0, a)
  double log_ratio_at_zero;
};

/// Closed-form supremum of w_N / w_inf. Requires N >= 3.
VarpiResult varpi_and_A(const SphereSpec& spec, double alpha);

/// (1 - |x|^2/a^2)^{(N-n-1)/2} (2 pi alpha^2)^{n/2} exp(|x|^2/(2 alpha^2)) on the open
/// disc of radius a, zero outside. n = x.size() must be < N.
LogReal log_omega_density(unsigned N, double a, double alpha, std::span<const double> x);
double omega_density(unsigned N, double a, double alpha, std::span<const double> x);

}  // namespace s2g
