#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "s2g/indices.hpp"

namespace s2g {

/// Which orthonormal basis a coefficient array refers to: normalized
/// Q_{n,K;alpha} on Gaussian space, or normalized P_{N,n,K} on S^N(a).
struct SpectralBasis {
  enum class Kind { gauss, sphere };
  Kind kind = Kind::gauss;
  double alpha = 1.0;
  unsigned N = 0;
  double a = 0.0;

  static SpectralBasis gauss(double alpha);
  static SpectralBasis sphere(unsigned N, double a);
  /// k/alpha^2 or k(k+N-1)/a^2.
  double eigenvalue(unsigned k) const;
};

struct SpectralCoefficients {
  unsigned n = 0;
  std::map<MultiIndex, double> entries;
  SpectralBasis basis;
};

/// Entries below this magnitude are dropped after evolution.
inline constexpr double kUnderflowPrune = 1e-300;

SpectralCoefficients heat_evolve(const SpectralCoefficients& c, double t);
double l2_norm(const SpectralCoefficients& c);
/// sum over K of lambda_{|K|} c_K^2.
double energy(const SpectralCoefficients& c);

/// Sphere-basis coefficients whose Cheeger energy on S^N(alpha sqrt(N-1))
/// equals the Gaussian energy of f: c_K scaled by sqrt(a^2 / ((|K|+N-1) alpha^2)).
SpectralCoefficients recovery_sequence(const SpectralCoefficients& f, unsigned N);

struct HeatRow {
  unsigned N;
  double l2_distance;
  double energy_sphere;
  double energy_gauss;
};

/// Same coefficient array evolved with sphere (a = alpha sqrt(N-1)) and
/// Gaussian eigenvalues; distance measured in coefficient space.
std::vector<HeatRow> heat_convergence_table(const SpectralCoefficients& f, double t,
                                            const std::vector<unsigned>& N_list);

struct CheegerRow {
  unsigned N;
  double energy_recovery;  ///< Cheeger energy of the recovery sequence on the sphere
  double energy_gauss;     ///< Dirichlet energy of f on Gaussian space
  double rel_err;
  double l2_recovery;
  double l2_gauss;
  double energy_fixed;     ///< sphere energy of the unscaled coefficient array
  double defect;           ///< sum c_K^2 |lambda_K(S^N) - lambda_K(Gamma)|
};

std::vector<CheegerRow> cheeger_table(const SpectralCoefficients& f, const std::vector<unsigned>& N_list);

/// Reads lines "K_1 ... K_n value"; blank lines and '#' comments are skipped.
/// All lines must agree on n. Repeated K accumulate.
SpectralCoefficients parse_coefficients(std::istream& in, double alpha);

}  // namespace s2g
