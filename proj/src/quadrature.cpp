#include "s2g/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

namespace s2g {

namespace {

// Off-diagonal of the Jacobi matrix and the total mass of the measure.
struct Recurrence {
  std::function<double(unsigned)> b;
  double mass;
};

Recurrence recurrence_for(RuleKind kind) {
  if (kind == RuleKind::legendre) {
    return {[](unsigned k) { return k / std::sqrt(4.0 * k * k - 1.0); }, 2.0};
  }
  return {[](unsigned k) { return std::sqrt(static_cast<double>(k)); }, 1.0};
}

// Orthonormal p_n(x), p_n'(x) and sum_{k<n} p_k(x)^2.
struct OrthoEval {
  double p;
  double dp;
  double christoffel_sum;
};

OrthoEval ortho_eval(const Recurrence& rec, unsigned n, double x) {
  double p_prev = 0.0, dp_prev = 0.0;
  double p = 1.0 / std::sqrt(rec.mass), dp = 0.0;
  double sum = 0.0;
  for (unsigned k = 0; k < n; ++k) {
    sum += p * p;
    const double bk = k == 0 ? 0.0 : rec.b(k);
    const double bk1 = rec.b(k + 1);
    const double p_next = (x * p - bk * p_prev) / bk1;
    const double dp_next = (p + x * dp - bk * dp_prev) / bk1;
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
  }
  return {p, dp, sum};
}

QuadratureRule golub_welsch(RuleKind kind, unsigned order) {
  if (order < 1) throw std::invalid_argument("quadrature rule: order must be >= 1");
  const Recurrence rec = recurrence_for(kind);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
  for (unsigned k = 1; k < order; ++k) {
    J(k, k - 1) = J(k - 1, k) = rec.b(k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw QuadratureError("Golub-Welsch eigensolve failed");

  QuadratureRule rule{{}, {}, kind, order};
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (unsigned i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const OrthoEval e = ortho_eval(rec, order, x);
      if (e.dp == 0.0) break;
      x -= e.p / e.dp;
    }
    rule.nodes[i] = x;
  }
  // The rules are symmetric; average mirrored nodes so the symmetry is exact.
  for (unsigned i = 0; i < order / 2; ++i) {
    const double m = 0.5 * (rule.nodes[order - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -m;
    rule.nodes[order - 1 - i] = m;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  for (unsigned i = 0; i < order; ++i) {
    rule.weights[i] = 1.0 / ortho_eval(rec, order, rule.nodes[i]).christoffel_sum;
  }
  return rule;
}

template <RuleKind Kind>
const QuadratureRule& cached(unsigned order) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<QuadratureRule>(golub_welsch(Kind, order));
  return *slot;
}

double checked(double value, double node) {
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "non-finite integrand value at node " << node;
    throw QuadratureError(os.str());
  }
  return value;
}

}  // namespace

QuadratureRule gauss_legendre(unsigned order) { return golub_welsch(RuleKind::legendre, order); }
QuadratureRule gauss_hermite(unsigned order) { return golub_welsch(RuleKind::hermite, order); }

const QuadratureRule& cached_legendre(unsigned order) { return cached<RuleKind::legendre>(order); }
const QuadratureRule& cached_hermite(unsigned order) { return cached<RuleKind::hermite>(order); }

double integrate_interval(const Integrand& f, double lo, double hi, unsigned order, unsigned panels) {
  if (order < 2) throw std::invalid_argument("integrate_interval: order must be >= 2");
  if (panels < 1) throw std::invalid_argument("integrate_interval: panels must be >= 1");
  const QuadratureRule& rule = cached_legendre(order);
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (unsigned p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    double panel = 0.0;
    for (unsigned i = 0; i < order; ++i) {
      const double x = mid + 0.5 * width * rule.nodes[i];
      panel += rule.weights[i] * checked(f(x), x);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

double integrate_refined(const Integrand& f, double lo, double hi, double rel_tol, unsigned order,
                         double abs_tol) {
  unsigned panels = 1;
  double prev = integrate_interval(f, lo, hi, order, panels);
  for (int doubling = 0; doubling < 20; ++doubling) {
    panels *= 2;
    const double cur = integrate_interval(f, lo, hi, order, panels);
    if (std::abs(cur - prev) <= std::max(rel_tol * std::abs(cur), abs_tol)) return cur;
    prev = cur;
  }
  throw QuadratureError("integrate_refined: no convergence after 20 panel doublings");
}

double integrate_gauss(const Integrand& f, const GaussSpec& spec, unsigned order) {
  const QuadratureRule& rule = cached_hermite(order);
  double total = 0.0;
  for (unsigned i = 0; i < order; ++i) {
    const double x = spec.alpha * rule.nodes[i];
    total += rule.weights[i] * checked(f(x), x);
  }
  return total;
}

double integrate_disc(const DiscIntegrand& g, unsigned n, double a, double power, unsigned order) {
  if (n < 1) throw std::invalid_argument("integrate_disc: n must be >= 1");
  const double q = 2.0 * power;
  if (q < -1.0 || q != std::round(q)) {
    throw std::invalid_argument("integrate_disc: power must be a half-integer >= -1/2");
  }
  const int qi = static_cast<int>(q);
  const QuadratureRule& rule = cached_legendre(order);
  const double half_pi = 0.5 * std::numbers::pi;
  std::vector<double> x(n);

  std::function<double(unsigned, double)> level = [&](unsigned i, double scale) -> double {
    const int cos_power = qi + static_cast<int>(n - i);
    double sum = 0.0;
    for (unsigned k = 0; k < order; ++k) {
      const double phi = half_pi * rule.nodes[k];
      const double c = std::cos(phi);
      x[i] = scale * std::sin(phi);
      const double inner = i + 1 == n ? checked(g(x), x[i]) : level(i + 1, scale * c);
      sum += rule.weights[k] * std::pow(c, cos_power) * inner;
    }
    return half_pi * sum;
  };
  return std::pow(a, n) * level(0, a);
}

double sphere_inner_product(const LiftedPoly& F, const LiftedPoly& G, double a, unsigned order) {
  if (F.n() != G.n() || F.N() != G.N()) {
    throw std::invalid_argument("sphere_inner_product: mismatched (n, N)");
  }
  const unsigned n = F.n(), N = F.N();
  if (N < 2) throw std::invalid_argument("sphere_inner_product: requires N >= 2");
  const NumericPoly f(F.base()), g(G.base());
  std::vector<double> lifted(n + 1);
  const double a2 = a * a;
  auto integrand = [&](std::span<const double> x) {
    double x2 = 0.0;
    for (unsigned i = 0; i < n; ++i) {
      lifted[i] = x[i];
      x2 += x[i] * x[i];
    }
    lifted[n] = a2 - x2;
    return f(lifted) * g(lifted);
  };
  const double power = 0.5 * (static_cast<double>(N) - n - 1.0);
  return std::exp(sphere_volume_log(N - n, a)) * integrate_disc(integrand, n, a, power, order);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SphereSampler::SphereSampler(const SphereSpec& spec, std::uint64_t seed, std::uint64_t stream)
    : spec_(spec), engine_(splitmix64(seed ^ splitmix64(stream))) {}

void SphereSampler::sample(std::span<double> out) {
  if (out.size() != spec_.N + 1) throw std::invalid_argument("SphereSampler: output size must be N+1");
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& v : out) {
      v = normal_(engine_);
      norm2 += v * v;
    }
  } while (norm2 == 0.0);
  const double scale = spec_.a / std::sqrt(norm2);
  for (double& v : out) v *= scale;
}

std::vector<double> SphereSampler::sample() {
  std::vector<double> out(spec_.N + 1);
  sample(out);
  return out;
}

MonteCarloEstimate monte_carlo_mean(const std::function<double(std::span<const double>)>& f,
                                    SphereSampler& sampler, std::size_t count) {
  if (count < 2) throw std::invalid_argument("monte_carlo_mean: need at least two samples");
  std::vector<double> z;
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    z = sampler.sample();
    const double v = f(z);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  const double var = m2 / static_cast<double>(count - 1);
  return {mean, std::sqrt(var / static_cast<double>(count)), count};
}

namespace {

// int_0^theta sin^{N-1}, theta <= pi/2, with panels scaled to the peak width.
double sine_power_integral(unsigned N, double theta) {
  const double e = static_cast<double>(N) - 1.0;
  auto f = [e](double x) {
    const double s = std::sin(x);
    return e == 0.0 ? 1.0 : (s <= 0.0 ? 0.0 : std::exp(e * std::log(s)));
  };
  const auto panels = static_cast<unsigned>(std::clamp(std::ceil(std::sqrt(e + 1.0)), 4.0, 4096.0));
  return integrate_interval(f, 0.0, theta, 32, panels);
}

}  // namespace

double cap_volume_fraction(unsigned N, double theta) {
  if (N < 1) throw std::invalid_argument("cap_volume_fraction: N must be >= 1");
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw std::invalid_argument("cap_volume_fraction: theta must lie in (0, pi)");
  }
  const double half_pi = 0.5 * std::numbers::pi;
  if (theta == half_pi) return 0.5;
  const double half = sine_power_integral(N, half_pi);
  if (theta < half_pi) return 0.5 * sine_power_integral(N, theta) / half;
  return 1.0 - 0.5 * sine_power_integral(N, std::numbers::pi - theta) / half;
}

}  // namespace s2g
