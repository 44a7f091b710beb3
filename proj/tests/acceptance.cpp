// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "s2g/convergence.hpp"
#include "s2g/eigensolve.hpp"
#include "s2g/geometry.hpp"
#include "s2g/harmonics.hpp"
#include "s2g/heat.hpp"
#include "s2g/quadrature.hpp"
#include "s2g/verify.hpp"

using namespace s2g;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string note;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Verdict suite(const std::string& name, double budget = 0.0) {
  const auto t0 = Clock::now();
  const SuiteResult r = run_suite(name, VerifyOptions{});
  const double dt = seconds_since(t0);
  bool pass = r.pass;
  std::string note = r.summary + (r.detail.empty() ? "" : " [" + r.detail + "]");
  if (budget > 0) {
    pass = pass && dt < budget;
    note += " in " + fmt("%.1f", dt) + "s";
  }
  return {pass, note};
}

Verdict hemisphere() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (unsigned N = 2; N <= 50; ++N) {
    for (double a : {1.0, std::sqrt(N - 1.0)}) {
      const double l = cap_eigenvalue(CapProblem{N, a, std::numbers::pi / 2}, 1e-9).lambda;
      worst = std::max(worst, std::abs(l - N / (a * a)));
    }
  }
  const double dt = seconds_since(t0);
  return {worst <= 1e-8 && dt < 60, "max |lambda - N/a^2| = " + fmt("%.2e", worst) + " in " + fmt("%.1f", dt) + "s"};
}

Verdict friedland_hayman() {
  double worst = 0.0;
  bool monotone = true;
  std::vector<double> prev{1e300, 1e300};
  for (unsigned N = 2; N <= 30; ++N) {
    worst = std::max(worst, std::abs(nu_of_s(N, 0.5, 1e-10) - 1.0));
    const double s[] = {0.3, 0.7};
    for (int i = 0; i < 2; ++i) {
      const double v = nu_of_s(N, s[i], 1e-10);
      if (v > prev[i] + 1e-9) monotone = false;
      prev[i] = v;
    }
  }
  return {worst <= 1e-7 && monotone,
          "max |nu(1/2) - 1| = " + fmt("%.2e", worst) + (monotone ? ", nonincreasing" : ", NOT monotone")};
}

Verdict closed_slice() {
  const std::vector<unsigned> Ns{25, 50, 100, 200, 400};
  const auto rows = dirichlet_convergence_table(1.0, 0.0, default_schedule(1.0, 0.0, Ns), DirichletOptions{});
  double cap = 0.0, half = 0.0;
  bool ok = rows.size() == Ns.size();
  for (const auto& r : rows) {
    ok = ok && r.ok();
    const double N = r.entry.N;
    cap = std::max(cap, std::abs(r.lhs - N / (N - 1)));
    half = std::max(half, std::abs(r.rhs - 1.0));
  }
  for (const auto& r : closed_spectrum_table(1, 1, 1, Ns)) {
    if (r.k == 1 && r.abs_err != mpq_class(1, r.N - 1)) ok = false;
  }
  return {ok && cap <= 1e-7 && half <= 1e-7,
          "cap err " + fmt("%.2e", cap) + ", half-line err " + fmt("%.2e", half) + ", exact table 1/(N-1)"};
}

Verdict generic_slice() {
  const auto t0 = Clock::now();
  const std::vector<unsigned> Ns{25, 50, 100, 200, 400};
  bool ok = true;
  std::ostringstream note;
  for (double R : {-0.5, 0.5, 1.0}) {
    const auto rows = dirichlet_convergence_table(1.0, R, default_schedule(1.0, R, Ns), DirichletOptions{});
    double prev = 1e300;
    if (rows.size() != Ns.size()) ok = false;
    for (const auto& r : rows) {
      if (!r.ok() || !(r.abs_err < prev)) ok = false;
      prev = r.abs_err;
    }
    if (!(prev < 0.05)) ok = false;
    note << "R=" << R << " final " << fmt("%.4f", prev) << "; ";
  }
  const double dt = seconds_since(t0);
  note << fmt("%.1f", dt) << "s";
  return {ok && dt < 300, note.str()};
}

Verdict halfline_anchor() {
  double worst = 0.0;
  for (double alpha : {1.0, 2.0}) {
    for (unsigned j = 1; j <= 4; ++j) {
      const double l = halfline_eigenvalue(HalflineProblem{alpha, 0.0, 0, j}, 1e-10).lambda;
      worst = std::max(worst, std::abs(l - (2.0 * j - 1) / (alpha * alpha)));
    }
  }
  return {worst <= 1e-6, "max err " + fmt("%.2e", worst)};
}

Verdict remark_integral() {
  const RationalPoly x1 = RationalPoly::variable(3, 0), x2 = RationalPoly::variable(3, 1);
  const double v = sphere_inner_product(LiftedPoly(x1 * x1, 2, 2), LiftedPoly(x1 * x1 - x2 * x2, 2, 2), 1.0);
  const double err = std::abs(v - 8 * std::numbers::pi / 15);
  return {err <= 1e-9, "err " + fmt("%.2e", err)};
}

// int_{S^N(a)} x^J |y|^{2m}, y in R^{N-n+1}
double sphere_moment(const std::vector<unsigned>& J, unsigned m, unsigned N, double a) {
  const unsigned n = static_cast<unsigned>(J.size());
  const double M = N - n + 1.0;
  double log_v = std::log(2.0);
  unsigned total = 2 * m;
  for (unsigned j : J) {
    if (j % 2) return 0.0;
    log_v += std::lgamma((j + 1.0) / 2);
    total += j;
  }
  log_v += 0.5 * M * std::log(std::numbers::pi) + std::lgamma(m + M / 2) - std::lgamma(M / 2);
  log_v -= std::lgamma((total + N + 1.0) / 2);
  return std::exp(log_v + (N + total) * std::log(a));
}

Verdict perp_identity() {
  const double alpha = 1.0;
  double worst = 0.0;
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned N = n + 1; N <= 8; ++N) {
      const double a = alpha * std::sqrt(N - 1.0);
      const mpq_class a2(N - 1);
      for (const MultiIndex& K : enumerate_multi_indices_up_to(n, 3)) {
        // sphere side: exact moments of P^2
        const LiftedPoly P = build_P(N, K);
        const RationalPoly PP = P.base() * P.base();
        double sphere = 0.0;
        for (const auto& [e, c] : PP.terms()) {
          std::vector<unsigned> J(e.entries().begin(), e.entries().begin() + n);
          sphere += c.get_d() * sphere_moment(J, e[n], N, a);
        }
        // Gaussian side: int Q^2 omega d gamma, the boundary factor handed to the disc rule
        const NumericPoly Q(build_Q_sphere(N, K, a2));
        const double power = (N - n - 1.0) / 2;
        auto g = [&](std::span<const double> x) {
          double r2 = 0.0;
          for (double v : x) r2 += v * v;
          const double pdf = std::exp(-r2 / (2 * alpha * alpha)) / std::pow(2 * std::numbers::pi * alpha * alpha, n / 2.0);
          const double q = Q(x);
          return q * q * omega_density(N, a, alpha, x) * pdf / std::pow(1 - r2 / (a * a), power);
        };
        const double gauss = integrate_disc(g, n, a, power) * std::exp(sphere_volume_log(N - n, a));
        worst = std::max(worst, std::abs(gauss - sphere) / std::abs(sphere));
      }
    }
  }
  return {worst <= 1e-6, "max rel diff " + fmt("%.2e", worst)};
}

Verdict stirling() {
  const double alpha = 1.0;
  const unsigned N = 1000000;
  const double a = alpha * std::sqrt(N - 1.0);
  double worst = 0.0;
  for (unsigned n = 1; n <= 3; ++n) {
    const double lr = sphere_volume_log(N, a) - sphere_volume_log(N - n, a);
    worst = std::max(worst, std::abs(std::expm1(lr - 0.5 * n * std::log(2 * std::numbers::pi * alpha * alpha))));
  }
  return {worst <= 1e-5, "max rel err " + fmt("%.2e", worst)};
}

SpectralCoefficients test_coefficients() {
  SpectralCoefficients f;
  f.n = 2;
  f.basis = SpectralBasis::gauss(1.0);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const MultiIndex& K : enumerate_multi_indices_up_to(2, 6)) f.entries[K] = u(rng);
  return f;
}

Verdict heat() {
  const SpectralCoefficients f = test_coefficients();
  const auto rows = heat_convergence_table(f, 1.0, {100, 1000, 10000});
  const double norm = l2_norm(f);
  const bool monotone = rows[1].l2_distance < rows[0].l2_distance && rows[2].l2_distance < rows[1].l2_distance;
  const double rel = rows[1].l2_distance / norm;
  return {rel <= 1e-3 && monotone, "distance/||f|| at N=1000: " + fmt("%.2e", rel) +
                                      (monotone ? ", decreasing" : ", NOT decreasing")};
}

Verdict cheeger() {
  double worst = 0.0;
  for (const auto& r : cheeger_table(test_coefficients(), {10, 100, 1000})) worst = std::max(worst, r.rel_err);
  return {worst <= 1e-12, "max rel err " + fmt("%.2e", worst)};
}

Verdict proof_identities() {
  const double alpha = 1.0;
  double norm_err = 0.0, energy_err = 0.0;
  bool moment_ok = true;
  for (unsigned N : {10u, 50u, 200u}) {
    for (double R : {0.0, 1.0}) {
      const ScheduleEntry e = default_schedule(alpha, R, {N}).at(0);
      const CapProblem p{N, e.a, e.theta};
      const double lambda = cap_eigenvalue(p, 1e-10).lambda;
      const CapEigenfunction h(p, lambda);
      const WeightProfile w(SphereSpec(N, e.a), alpha);
      const double lo = e.a * std::cos(e.theta);
      auto at = [&](double r) {
        const double x[] = {r};
        return h.at_r(x)[0];
      };
      const double mass = integrate_refined([&](double r) { return std::pow(at(r).h, 2) * w.sphere(r).value(); },
                                            lo, e.a, 1e-12);
      const double energy = integrate_refined(
          [&](double r) { return std::pow(at(r).dh, 2) * w.s(r) * w.sphere(r).value(); }, lo, e.a, 1e-12);
      const double moment = integrate_refined(
          [&](double r) { return r * r * std::pow(at(r).h, 2) * w.sphere(r).value(); }, lo, e.a, 1e-12);
      const double a2 = e.a * e.a;
      norm_err = std::max(norm_err, std::abs(mass - 1.0));
      energy_err = std::max(energy_err, std::abs(energy - lambda));
      if (!(moment <= 2 * a2 / N * (1 + 2 * a2 * lambda / N))) moment_ok = false;
    }
  }
  return {norm_err <= 1e-8 && energy_err <= 1e-6 && moment_ok,
          "norm err " + fmt("%.2e", norm_err) + ", energy err " + fmt("%.2e", energy_err) +
              (moment_ok ? ", second moment bound holds" : ", second moment bound VIOLATED")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"exact harmonicity", [] { return suite("harmonicity", 30); }},
      {"OU eigen-identity", [] { return suite("ou-identity"); }},
      {"dimension identity", [] { return suite("dimension"); }},
      {"exact error law", [] { return suite("error-law"); }},
      {"hemisphere anchor", hemisphere},
      {"Friedland-Hayman exponent", friedland_hayman},
      {"closed-form Dirichlet slice", closed_slice},
      {"generic Dirichlet slice", generic_slice},
      {"half-line spectrum", halfline_anchor},
      {"8pi/15 integral", remark_integral},
      {"perp norm identity", perp_identity},
      {"Stirling volume ratio", stirling},
      {"heat-flow convergence", heat},
      {"Cheeger recovery", cheeger},
      {"normalization and energy identities", proof_identities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
