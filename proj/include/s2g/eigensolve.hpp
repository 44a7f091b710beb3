#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace s2g {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dirichlet problem on the geodesic ball of radius a*theta around the pole of
/// S^N(a), separated with angular degree k; j selects the radial branch.
struct CapProblem {
  unsigned N;
  double a;
  double theta;
  unsigned k = 0;
  unsigned j = 1;
};

/// Dirichlet problem for the 1-D Ornstein-Uhlenbeck operator on (alpha R, inf),
/// shifted by k/alpha^2. `cutoff` is C in the truncation point L = alpha (R + C).
struct HalflineProblem {
  double alpha;
  double R;
  unsigned k = 0;
  unsigned j = 1;
  double cutoff = 14.0;
};

using SturmLiouvilleSpec = std::variant<CapProblem, HalflineProblem>;

void validate(const CapProblem& p);
void validate(const HalflineProblem& p);

/// Coordinate of EigenResult::samples: r for the radial forms (cap with k = 0,
/// half-line), geodesic distance from the pole for caps with k > 0.
enum class SampleCoordinate { radial, geodesic };

struct EigenResult {
  double lambda = 0.0;
  /// max of the scaled ODE residual on the verification grid and the scaled
  /// boundary value at the Dirichlet end.
  double residual = 0.0;
  unsigned zeros = 0;
  /// (abscissa, value), ascending abscissa, scaled so max |value| = 1.
  std::vector<std::pair<double, double>> samples;
  /// Derivative with respect to the abscissa at each sample.
  std::vector<double> slopes;
  SampleCoordinate coordinate = SampleCoordinate::radial;
  unsigned iterations = 0;
};

EigenResult cap_eigenvalue(const CapProblem& problem, double tol);
EigenResult halfline_eigenvalue(const HalflineProblem& problem, double tol);

/// Positive root of nu (nu + N - 1) = lambda(cap of volume fraction s on S^N(1)).
double nu_of_s(unsigned N, double s, double tol);

/// Half-angle of the cap on S^N with the given volume fraction.
double cap_angle_for_fraction(unsigned N, double s);

/// Max over interior grid points of |residual| / (1 + |lambda| |value|), with the
/// second derivative taken by sixth-order differences of the sampled slopes.
/// Also folds in the boundary value at the Dirichlet end.
double ode_residual(const EigenResult& result, const SturmLiouvilleSpec& problem);

struct ProfilePoint {
  double h;
  double dh;
};

/// Cap eigenfunction as a function of r = a cos(vartheta/a), scaled so that
/// int h^2 w_N dr = 1 over (a cos theta, a) and positive near the pole.
class CapEigenfunction {
 public:
  CapEigenfunction(const CapProblem& problem, double lambda, double rtol = 1e-12);

  double lambda() const { return lambda_; }
  /// int h'^2 s_N w_N dr, accumulated along the ODE.
  double energy() const { return energy_; }
  const CapProblem& problem() const { return problem_; }

  /// h and dh/dr at arbitrary r; zero outside (a cos theta, a].
  std::vector<ProfilePoint> at_r(std::span<const double> r) const;

 private:
  CapProblem problem_;
  double lambda_;
  double rtol_;
  double scale_ = 1.0;
  double energy_ = 0.0;
};

/// Half-line eigenfunction scaled so that int h^2 d gamma^1_alpha = 1, positive
/// just right of alpha R.
class HalflineEigenfunction {
 public:
  HalflineEigenfunction(const HalflineProblem& problem, double lambda, double rtol = 1e-12);

  double lambda() const { return lambda_; }
  double truncation() const;
  const HalflineProblem& problem() const { return problem_; }

  /// Zero left of alpha R; beyond the truncation point the asymptotic
  /// recessive solution ~ r^{mu alpha^2} continues it.
  std::vector<ProfilePoint> at_r(std::span<const double> r) const;

 private:
  HalflineProblem problem_;
  double lambda_;
  double rtol_;
  double scale_ = 1.0;
};

}  // namespace s2g
