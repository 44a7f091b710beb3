#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "s2g/geometry.hpp"
#include "s2g/polynomial.hpp"

namespace s2g {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RuleKind { legendre, hermite };

/// Legendre rules live on [-1, 1] with weights summing to 2. Hermite rules
/// integrate against the standard normal density (weights sum to 1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind;
  unsigned order;
};

QuadratureRule gauss_legendre(unsigned order);
QuadratureRule gauss_hermite(unsigned order);

/// Memoized copies, safe to call from several threads.
const QuadratureRule& cached_legendre(unsigned order);
const QuadratureRule& cached_hermite(unsigned order);

using Integrand = std::function<double(double)>;

/// Composite Gauss-Legendre on [lo, hi] with `panels` equal panels.
double integrate_interval(const Integrand& f, double lo, double hi, unsigned order = 32,
                          unsigned panels = 1);

/// Doubles the panel count until two successive estimates agree to rel_tol
/// (absolute floor abs_tol); gives up after 20 doublings.
double integrate_refined(const Integrand& f, double lo, double hi, double rel_tol,
                         unsigned order = 32, double abs_tol = 0.0);

/// Gauss-Hermite estimate of int f d gamma^1_alpha.
double integrate_gauss(const Integrand& f, const GaussSpec& spec, unsigned order = 64);

using DiscIntegrand = std::function<double(std::span<const double>)>;

/// int_{|x| < a} g(x) (1 - |x|^2/a^2)^power dx over R^n, with power = q/2 for an
/// integer q >= -1. Nested sine substitutions turn every factor into an integer
/// power of a cosine, so tensor Gauss-Legendre stays accurate.
double integrate_disc(const DiscIntegrand& g, unsigned n, double a, double power,
                      unsigned order = 48);

/// int_{S^N(a)} F G dvol for lifted polynomials of matching (n, N); n = N is allowed.
double sphere_inner_product(const LiftedPoly& F, const LiftedPoly& G, double a,
                            unsigned order = 48);

/// Uniform points on S^N(a): normalized vectors of N+1 standard Gaussians.
class SphereSampler {
 public:
  SphereSampler(const SphereSpec& spec, std::uint64_t seed, std::uint64_t stream = 0);

  void sample(std::span<double> out);
  std::vector<double> sample();

 private:
  SphereSpec spec_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

struct MonteCarloEstimate {
  double mean;
  double std_error;
  std::size_t count;
};

MonteCarloEstimate monte_carlo_mean(const std::function<double(std::span<const double>)>& f,
                                    SphereSampler& sampler, std::size_t count);

/// vol(cap of angular radius theta) / vol(S^N), from the sine-power integrals.
double cap_volume_fraction(unsigned N, double theta);

}  // namespace s2g
