#include "s2g/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>

#include "s2g/ode.hpp"
#include "s2g/quadrature.hpp"

namespace s2g {

namespace {

constexpr std::size_t kGridPoints = 1024;
constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// --- cap problem on the unit sphere, x = vartheta / a -----------------------

struct CapUnit {
  unsigned N;
  unsigned k;
  double theta;
  double lam;  // eigenvalue on S^N(1)

  double kappa() const { return static_cast<double>(k) * (k + N - 2.0); }
  double x0() const { return 1e-6 * theta; }
  // phi = (x/x0)^k (1 + c x^2) near the pole.
  double c() const {
    return ((N - 1.0) * k / 3.0 + kappa() / 3.0 - lam) / (2.0 * (2.0 * k + N));
  }
  std::pair<double, double> series(double x) const {
    const double cc = c();
    if (k == 0) return {1.0 + cc * x * x, 2.0 * cc * x};
    const double u = x / x0();
    const double uk = std::pow(u, k);
    const double ukm1 = std::pow(u, static_cast<double>(k) - 1.0);
    return {uk * (1.0 + cc * x * x), k * ukm1 / x0() * (1.0 + cc * x * x) + uk * 2.0 * cc * x};
  }
  double P(double x) const { return (N - 1.0) * std::cos(x) / std::sin(x); }
  double Q(double x) const {
    const double s = std::sin(x);
    return lam - kappa() / (s * s);
  }
};

double prufer_rhs(double psi, double P, double Q) {
  const double s = std::sin(psi), c = std::cos(psi);
  return c * c + P * s * c + Q * s * s;
}

OdeOptions shoot_options(double rtol) {
  OdeOptions o;
  o.rtol = rtol;
  o.atol = rtol * 1e-2;
  return o;
}

double cap_psi_end(const CapUnit& u, double rtol) {
  const auto [phi0, dphi0] = u.series(u.x0());
  OdeState<1> y;
  y << std::atan2(phi0, dphi0);
  auto rhs = [&u](double x, const OdeState<1>& s) {
    OdeState<1> d;
    d << prufer_rhs(s(0), u.P(x), u.Q(x));
    return d;
  };
  const double stops[] = {u.theta};
  OdeOptions opt = shoot_options(rtol);
  opt.initial_step = 0.05 * u.x0();
  return integrate_dp45<1>(rhs, u.x0(), y, stops, opt, [](std::size_t, double, const OdeState<1>&) {})(0);
}

// Dense pass: phi, phi', psi, int phi^2 sin^{N-1}, int phi'^2 sin^{N-1}.
struct CapPass {
  std::vector<double> phi, dphi;  // at the requested (ascending) points
  double psi0 = 0.0;
  double psi_end = 0.0;
  double mass = 0.0;
  double energy = 0.0;
};

CapPass cap_dense(const CapUnit& u, std::span<const double> xs, double rtol) {
  CapPass out;
  out.phi.resize(xs.size());
  out.dphi.resize(xs.size());
  const double x0 = u.x0();
  std::vector<double> stops;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < x0) {
      std::tie(out.phi[i], out.dphi[i]) = u.series(xs[i]);
    } else {
      stops.push_back(xs[i]);
      where.push_back(i);
    }
  }
  if (stops.empty() || stops.back() < u.theta) stops.push_back(u.theta);

  const auto [phi0, dphi0] = u.series(x0);
  out.psi0 = std::atan2(phi0, dphi0);
  OdeState<5> y;
  // Mass and energy below x0 are O(x0^{N+2k}) relative and dropped.
  y << phi0, dphi0, out.psi0, 0.0, 0.0;
  const double e = u.N - 1.0;
  auto rhs = [&u, e](double x, const OdeState<5>& s) {
    const double P = u.P(x), Q = u.Q(x);
    const double w = std::exp(e * std::log(std::sin(x)));
    OdeState<5> d;
    d << s(1), -P * s(1) - Q * s(0), prufer_rhs(s(2), P, Q), s(0) * s(0) * w, s(1) * s(1) * w;
    return d;
  };
  OdeOptions opt = shoot_options(rtol);
  opt.atol = 1e-300;
  opt.initial_step = 0.05 * x0;
  const OdeState<5> last = integrate_dp45<5>(
      rhs, x0, y, stops, opt, [&](std::size_t idx, double, const OdeState<5>& s) {
        if (idx < where.size()) {
          out.phi[where[idx]] = s(0);
          out.dphi[where[idx]] = s(1);
        }
      });
  out.psi_end = last(2);
  out.mass = last(3);
  out.energy = last(4);
  return out;
}

// --- half-line problem in rho = r / alpha, integrated inward in s = -rho ----

struct HalfUnit {
  double R;
  double L;
  double mu;  // eigenvalue of h'' - rho h' = -mu h

  // Recessive solution rho^mu sum_k c_k rho^{-2k} and its derivative, summed
  // until the asymptotic terms stop shrinking. Leading order gives h'/h = mu/rho.
  std::pair<double, double> recessive(double rho) const {
    double c = 1.0, h = 0.0, dh = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 40; ++k) {
      const double e = mu - 2.0 * k;
      const double term = c * std::pow(rho, e);
      if (std::abs(term) >= prev) break;
      h += term;
      dh += c * e * std::pow(rho, e - 1.0);
      prev = std::abs(term);
      c *= -e * (e - 1.0) / (2.0 * (k + 1));
      if (c == 0.0) break;
    }
    return {h, dh};
  }
  // Starting slope of g(s) = h(-s) at s = -L, with g(-L) = 1.
  double start_slope() const {
    const auto [h, dh] = recessive(L);
    return -dh / h;
  }
};

double half_psi_end(const HalfUnit& u, double rtol) {
  OdeState<1> y;
  y << std::atan2(1.0, u.start_slope());
  auto rhs = [&u](double s, const OdeState<1>& st) {
    OdeState<1> d;
    d << prufer_rhs(st(0), -s, u.mu);
    return d;
  };
  const double stops[] = {-u.R};
  return integrate_dp45<1>(rhs, -u.L, y, stops, shoot_options(rtol),
                           [](std::size_t, double, const OdeState<1>&) {})(0);
}

struct HalfPass {
  std::vector<double> g, dg;  // g(s) and dg/ds at the requested ascending s
  double psi_end = 0.0;
  double mass = 0.0;
};

HalfPass half_dense(const HalfUnit& u, std::span<const double> ss, double rtol) {
  HalfPass out;
  out.g.resize(ss.size());
  out.dg.resize(ss.size());
  std::vector<double> stops(ss.begin(), ss.end());
  if (stops.empty() || stops.back() < -u.R) stops.push_back(-u.R);
  const double g0 = 1.0, dg0 = u.start_slope();
  OdeState<4> y;
  y << g0, dg0, std::atan2(g0, dg0), 0.0;
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  auto rhs = [&u, norm](double s, const OdeState<4>& st) {
    const double rho = -s;
    OdeState<4> d;
    d << st(1), -rho * st(1) - u.mu * st(0), prufer_rhs(st(2), rho, u.mu),
        st(0) * st(0) * norm * std::exp(-0.5 * rho * rho);
    return d;
  };
  OdeOptions opt = shoot_options(rtol);
  opt.atol = 1e-300;
  const OdeState<4> last = integrate_dp45<4>(
      rhs, -u.L, y, stops, opt, [&](std::size_t idx, double, const OdeState<4>& st) {
        if (idx < ss.size()) {
          out.g[idx] = st(0);
          out.dg[idx] = st(1);
        }
      });
  out.psi_end = last(2);
  out.mass = last(3);
  return out;
}

// --- root finding -------------------------------------------------------------

struct Root {
  double value;
  unsigned iterations;
};

// F increasing with F(lo) < 0. Grows hi geometrically, then bisects until the
// bracket is narrower than width(mid).
template <typename F, typename W>
Root bracket_and_bisect(F&& f, double lo, double hi, W&& width) {
  if (!(f(lo) < 0)) throw SolverError("eigenvalue bracket: lower end is not below the target branch");
  unsigned iterations = 0;
  double f_hi = f(hi);
  for (int grow = 0; f_hi <= 0; ++grow) {
    if (f_hi == 0) return {hi, iterations};
    if (grow >= 60) throw SolverError("eigenvalue bracket not found");
    lo = hi;
    hi *= 2.0;
    f_hi = f(hi);
    ++iterations;
  }
  while (hi - lo > width(0.5 * (lo + hi))) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    ++iterations;
    if (fm == 0) return {mid, iterations};
    (fm < 0 ? lo : hi) = mid;
    if (iterations > 400) throw SolverError("eigenvalue bisection did not converge");
  }
  return {0.5 * (lo + hi), iterations};
}

double shoot_rtol(double tol) { return std::clamp(tol * 1e-3, 1e-13, 1e-6); }
double dense_rtol(double tol) { return std::clamp(tol * 1e-4, 1e-13, 1e-8); }

unsigned prufer_zeros(double psi0, double psi_end) {
  // Each zero of the solution is a crossing of a multiple of pi; the last one
  // is the Dirichlet end itself.
  const double crossings = std::floor((psi_end + 0.5) / kPi) - std::floor(psi0 / kPi);
  return crossings >= 1 ? static_cast<unsigned>(crossings) - 1 : 0;
}

// Uniform grid on [lo, hi] with kGridPoints points.
std::vector<double> uniform_grid(double lo, double hi) {
  std::vector<double> g(kGridPoints);
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kGridPoints - 1);
  }
  g.back() = hi;
  return g;
}

// Geodesic angle x with cos x = r / a, stable near the pole.
double angle_of_r(double r, double a) {
  const double u = std::clamp((1.0 - r / a) * 0.5, 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(u));
}

void max_normalize(EigenResult& res) {
  double peak = 0.0;
  for (const auto& [x, v] : res.samples) {
    if (std::abs(v) > std::abs(peak)) peak = v;
  }
  if (peak == 0.0) throw SolverError("eigenfunction vanished on the verification grid");
  // Positive orientation: the sign of the largest lobe is irrelevant, the
  // sign next to the regular end is fixed by the callers.
  const double scale = 1.0 / std::abs(peak);
  for (auto& [x, v] : res.samples) v *= scale;
  for (double& d : res.slopes) d *= scale;
}

}  // namespace

void validate(const CapProblem& p) {
  require(p.N >= 2, "cap problem: N must be >= 2");
  require(p.a > 0 && std::isfinite(p.a), "cap problem: a must be positive");
  require(p.theta > 0 && p.theta < kPi, "cap problem: theta must lie in (0, pi)");
  require(p.j >= 1, "cap problem: branch j must be >= 1");
}

void validate(const HalflineProblem& p) {
  require(p.alpha > 0 && std::isfinite(p.alpha), "half-line problem: alpha must be positive");
  require(std::isfinite(p.R), "half-line problem: R must be finite");
  require(p.j >= 1, "half-line problem: branch j must be >= 1");
  require(p.cutoff >= 4, "half-line problem: cutoff must be >= 4");
  require(p.R + p.cutoff > 1, "half-line problem: truncation point must lie right of 1");
}

EigenResult cap_eigenvalue(const CapProblem& problem, double tol) {
  validate(problem);
  require(tol > 0, "cap_eigenvalue: tol must be positive");
  const double a2 = problem.a * problem.a;
  CapUnit u{problem.N, problem.k, problem.theta, 0.0};
  const double target = problem.j * kPi;
  const double rtol = shoot_rtol(tol);
  auto f = [&](double lam) {
    u.lam = lam;
    return cap_psi_end(u, rtol) - target;
  };
  const double kk = problem.k + problem.j;
  const double guess =
      4.0 * kk * (kk + problem.N) * std::max(1.0, std::pow(0.5 * kPi / problem.theta, 2));
  const Root root = bracket_and_bisect(f, 0.0, guess, [&](double lam) {
    return 1e-3 * tol * a2 * std::max(1.0, lam / a2);
  });
  u.lam = root.value;

  EigenResult res;
  res.lambda = root.value / a2;
  res.iterations = root.iterations;
  const double a = problem.a;
  std::vector<double> xs;
  if (problem.k == 0) {
    res.coordinate = SampleCoordinate::radial;
    const std::vector<double> r = uniform_grid(a * std::cos(problem.theta), a);
    // ascending x is descending r
    for (auto it = r.rbegin(); it != r.rend(); ++it) xs.push_back(angle_of_r(*it, a));
    xs.front() = 0.0;
    xs.back() = problem.theta;
    const CapPass pass = cap_dense(u, xs, dense_rtol(tol));
    res.zeros = prufer_zeros(pass.psi0, pass.psi_end);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::size_t m = r.size() - 1 - i;
      const double x = xs[m];
      const double dh = x == 0.0 ? -2.0 * u.c() / a : -pass.dphi[m] / (a * std::sin(x));
      res.samples.emplace_back(r[i], pass.phi[m]);
      res.slopes.push_back(dh);
    }
  } else {
    res.coordinate = SampleCoordinate::geodesic;
    xs = uniform_grid(0.0, problem.theta);
    const CapPass pass = cap_dense(u, xs, dense_rtol(tol));
    res.zeros = prufer_zeros(pass.psi0, pass.psi_end);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      res.samples.emplace_back(a * xs[i], pass.phi[i]);
      res.slopes.push_back(pass.dphi[i] / a);
    }
  }
  max_normalize(res);
  res.residual = ode_residual(res, problem);
  return res;
}

EigenResult halfline_eigenvalue(const HalflineProblem& problem, double tol) {
  validate(problem);
  require(tol > 0, "halfline_eigenvalue: tol must be positive");
  const double alpha2 = problem.alpha * problem.alpha;
  const double target = problem.j * kPi;
  const double rtol = shoot_rtol(tol);

  auto solve_mu = [&](double cutoff) {
    HalfUnit u{problem.R, problem.R + cutoff, 0.0};
    auto f = [&](double mu) {
      u.mu = mu;
      return half_psi_end(u, rtol) - target;
    };
    const double guess = 4.0 * (2.0 * problem.j - 1.0) + problem.R * problem.R + 1.0;
    return bracket_and_bisect(f, 0.0, guess, [&](double mu) {
      return 1e-3 * tol * alpha2 * std::max(1.0, mu / alpha2);
    });
  };
  const Root root = solve_mu(problem.cutoff);
  const Root check = solve_mu(problem.cutoff + 2.0);
  if (std::abs(root.value - check.value) / alpha2 >= std::max(tol / 10, 1e-12)) {
    std::ostringstream os;
    os << "half-line truncation is not converged (eigenvalue moved by "
       << std::abs(root.value - check.value) / alpha2 << " when the cutoff grew by 2); "
       << "increase the cutoff";
    throw SolverError(os.str());
  }

  const HalfUnit u{problem.R, problem.R + problem.cutoff, root.value};
  EigenResult res;
  res.lambda = problem.k / alpha2 + root.value / alpha2;
  res.iterations = root.iterations;
  res.coordinate = SampleCoordinate::radial;
  const double alpha = problem.alpha;
  const std::vector<double> r = uniform_grid(alpha * u.R, alpha * u.L);
  std::vector<double> ss;
  for (auto it = r.rbegin(); it != r.rend(); ++it) ss.push_back(-*it / alpha);
  ss.front() = -u.L;
  ss.back() = -u.R;
  // The first stop coincides with the start; integrate_dp45 handles a zero-length leg.
  const HalfPass pass = half_dense(u, ss, dense_rtol(tol));
  res.zeros = prufer_zeros(std::atan2(1.0, u.start_slope()), pass.psi_end);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::size_t m = r.size() - 1 - i;
    res.samples.emplace_back(r[i], pass.g[m]);
    res.slopes.push_back(-pass.dg[m] / alpha);
  }
  max_normalize(res);
  res.residual = ode_residual(res, problem);
  return res;
}

double cap_angle_for_fraction(unsigned N, double s) {
  require(s > 0 && s < 1, "cap angle: volume fraction must lie in (0, 1)");
  double lo = 0.0, hi = kPi;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = cap_volume_fraction(N, mid);
    if (v == s) return mid;
    (v < s ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double nu_of_s(unsigned N, double s, double tol) {
  require(N >= 2, "nu: N must be >= 2");
  const double theta = cap_angle_for_fraction(N, s);
  const double lambda = cap_eigenvalue(CapProblem{N, 1.0, theta, 0, 1}, tol).lambda;
  const double m = N - 1.0;
  return 0.5 * (-m + std::sqrt(m * m + 4.0 * lambda));
}

namespace {

struct Coefficients {
  double A, B, C;
};

template <typename Coef>
double grid_residual(const EigenResult& res, Coef&& coef) {
  const auto& smp = res.samples;
  const std::size_t n = smp.size();
  if (n < 7 || res.slopes.size() != n) throw std::invalid_argument("ode_residual: too few samples");
  const double h = (smp.back().first - smp.front().first) / static_cast<double>(n - 1);
  double worst = 0.0;
  const auto& d = res.slopes;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    const double d2 = (45.0 * (d[i + 1] - d[i - 1]) - 9.0 * (d[i + 2] - d[i - 2]) + (d[i + 3] - d[i - 3])) /
                      (60.0 * h);
    const double x = smp[i].first, v = smp[i].second;
    const Coefficients c = coef(x);
    const double r = c.A * d2 + c.B * res.slopes[i] + c.C * v;
    worst = std::max(worst, std::abs(r) / (1.0 + std::abs(res.lambda) * std::abs(v)));
  }
  return worst;
}

}  // namespace

double ode_residual(const EigenResult& result, const SturmLiouvilleSpec& problem) {
  const double lam = result.lambda;
  if (const auto* cap = std::get_if<CapProblem>(&problem)) {
    const double a = cap->a, a2 = a * a;
    const double N = cap->N;
    if (result.coordinate == SampleCoordinate::radial) {
      const double interior = grid_residual(result, [&](double r) {
        return Coefficients{1.0 - r * r / a2, -N * r / a2, lam};
      });
      return std::max(interior, std::abs(result.samples.front().second));
    }
    const double kappa = static_cast<double>(cap->k) * (cap->k + N - 2.0);
    const double interior = grid_residual(result, [&](double t) {
      const double x = t / a, s = std::sin(x);
      return Coefficients{1.0, (N - 1.0) * std::cos(x) / (s * a), lam - kappa / (a2 * s * s)};
    });
    return std::max(interior, std::abs(result.samples.back().second));
  }
  const auto& half = std::get<HalflineProblem>(problem);
  const double alpha2 = half.alpha * half.alpha;
  const double mu = lam - half.k / alpha2;
  const double interior = grid_residual(result, [&](double r) {
    return Coefficients{1.0, -r / alpha2, mu};
  });
  return std::max(interior, std::abs(result.samples.front().second));
}

// --- normalized profiles ----------------------------------------------------

CapEigenfunction::CapEigenfunction(const CapProblem& problem, double lambda, double rtol)
    : problem_(problem), lambda_(lambda), rtol_(rtol) {
  validate(problem);
  const CapUnit u{problem.N, problem.k, problem.theta, lambda * problem.a * problem.a};
  const double end[] = {problem.theta};
  const CapPass pass = cap_dense(u, end, rtol_);
  const double N = problem.N;
  const double log_Z1 = 0.5 * std::log(kPi) + std::lgamma(N / 2) - std::lgamma((N + 1) / 2);
  const double mass = pass.mass / std::exp(log_Z1);
  if (!(mass > 0)) throw SolverError("cap eigenfunction has zero mass");
  scale_ = 1.0 / std::sqrt(mass);
  energy_ = scale_ * scale_ * pass.energy / std::exp(log_Z1) / (problem.a * problem.a);
}

std::vector<ProfilePoint> CapEigenfunction::at_r(std::span<const double> r) const {
  const double a = problem_.a;
  const double r_min = a * std::cos(problem_.theta);
  const CapUnit u{problem_.N, problem_.k, problem_.theta, lambda_ * a * a};
  std::vector<ProfilePoint> out(r.size(), ProfilePoint{0.0, 0.0});
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > r_min && r[i] <= a) idx.push_back(i);
  }
  if (idx.empty()) return out;
  std::vector<double> xs(idx.size());
  for (std::size_t m = 0; m < idx.size(); ++m) xs[m] = angle_of_r(r[idx[m]], a);
  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return xs[p] < xs[q]; });
  std::vector<double> sorted(order.size());
  for (std::size_t m = 0; m < order.size(); ++m) sorted[m] = xs[order[m]];
  const CapPass pass = cap_dense(u, sorted, rtol_);
  for (std::size_t m = 0; m < order.size(); ++m) {
    const double x = sorted[m];
    double ratio;  // phi'(x) / sin(x)
    if (x == 0.0) {
      ratio = problem_.k == 0 ? 2.0 * u.c() : 0.0;
    } else {
      ratio = pass.dphi[m] / std::sin(x);
    }
    out[idx[order[m]]] = ProfilePoint{scale_ * pass.phi[m], -scale_ * ratio / a};
  }
  return out;
}

HalflineEigenfunction::HalflineEigenfunction(const HalflineProblem& problem, double lambda,
                                             double rtol)
    : problem_(problem), lambda_(lambda), rtol_(rtol) {
  validate(problem);
  const double alpha2 = problem.alpha * problem.alpha;
  const HalfUnit u{problem.R, problem.R + problem.cutoff, (lambda - problem.k / alpha2) * alpha2};
  const double end[] = {-u.R};
  const HalfPass pass = half_dense(u, end, rtol_);
  if (!(pass.mass > 0)) throw SolverError("half-line eigenfunction has zero mass");
  // dh/dr at alpha R is -g'(s)/alpha; orient it positive.
  const double sign = pass.dg[0] > 0 ? -1.0 : 1.0;
  scale_ = sign / std::sqrt(pass.mass);
}

double HalflineEigenfunction::truncation() const {
  return problem_.alpha * (problem_.R + problem_.cutoff);
}

std::vector<ProfilePoint> HalflineEigenfunction::at_r(std::span<const double> r) const {
  const double alpha = problem_.alpha, alpha2 = alpha * alpha;
  const HalfUnit u{problem_.R, problem_.R + problem_.cutoff, (lambda_ - problem_.k / alpha2) * alpha2};
  std::vector<ProfilePoint> out(r.size(), ProfilePoint{0.0, 0.0});
  std::vector<std::size_t> idx;
  bool beyond = false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double rho = r[i] / alpha;
    if (rho >= u.R && rho <= u.L) idx.push_back(i);
    if (rho > u.L) beyond = true;
  }
  std::vector<double> ss(idx.size());
  for (std::size_t m = 0; m < idx.size(); ++m) ss[m] = -r[idx[m]] / alpha;
  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return ss[p] < ss[q]; });
  std::vector<double> sorted(order.size());
  for (std::size_t m = 0; m < order.size(); ++m) sorted[m] = ss[order[m]];
  if (!sorted.empty()) {
    const HalfPass pass = half_dense(u, sorted, rtol_);
    for (std::size_t m = 0; m < order.size(); ++m) {
      out[idx[order[m]]] = ProfilePoint{scale_ * pass.g[m], -scale_ * pass.dg[m] / alpha};
    }
  }
  if (beyond) {
    // Recessive continuation, matched to g = 1 at the truncation point.
    const double h_L = u.recessive(u.L).first;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double rho = r[i] / alpha;
      if (rho <= u.L) continue;
      const auto [h, dh] = u.recessive(rho);
      out[i] = ProfilePoint{scale_ * h / h_L, scale_ * dh / (h_L * alpha)};
    }
  }
  return out;
}

}  // namespace s2g
