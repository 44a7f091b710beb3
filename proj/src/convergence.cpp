#include "s2g/convergence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "s2g/geometry.hpp"
#include "s2g/indices.hpp"
#include "s2g/parallel.hpp"
#include "s2g/quadrature.hpp"

namespace s2g {

std::vector<ClosedRow> closed_spectrum_table(unsigned n, const mpq_class& alpha2, unsigned k_max,
                                             const std::vector<unsigned>& N_list) {
  if (alpha2 <= 0) throw std::invalid_argument("closed spectrum: alpha^2 must be positive");
  std::vector<ClosedRow> rows;
  for (unsigned N : N_list) {
    if (N < 2) throw std::invalid_argument("closed spectrum: N must be >= 2");
    if (n > N) throw std::invalid_argument("closed spectrum: requires n <= N");
    const mpq_class a2 = alpha2 * (N - 1);
    for (unsigned k = 0; k <= k_max; ++k) {
      ClosedRow row{N, k, a2, 0, 0, 0, gauss_multiplicity(n, k), sphere_multiplicity(N, k)};
      row.lhs = mpq_class(static_cast<unsigned long>(k) * (k + N - 1)) / a2;
      row.rhs = mpq_class(k) / alpha2;
      row.abs_err = abs(row.lhs - row.rhs);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ScheduleEntry> default_schedule(double alpha, double R, const std::vector<unsigned>& N_list,
                                            std::vector<std::string>* skipped) {
  std::vector<ScheduleEntry> out;
  for (unsigned N : N_list) {
    const double a = alpha * std::sqrt(N - 1.0);
    if (N < 2 || std::abs(alpha * R) >= a) {
      if (skipped) {
        std::ostringstream os;
        os << "N=" << N << ": |alpha R| >= a_N, no cap with a_N cos theta_N = alpha R";
        skipped->push_back(os.str());
      }
      continue;
    }
    out.push_back({N, a, std::acos(alpha * R / a)});
  }
  return out;
}

std::vector<DirichletRow> dirichlet_convergence_table(double alpha, double R,
                                                      const std::vector<ScheduleEntry>& schedule,
                                                      const DirichletOptions& opt) {
  EigenResult limit;
  std::string limit_error;
  try {
    limit = halfline_eigenvalue(HalflineProblem{alpha, R, 0, 1, opt.cutoff}, opt.tol);
    if (!(limit.residual <= opt.tol)) {
      std::ostringstream os;
      os << "half-line residual " << limit.residual << " exceeds tol";
      limit_error = os.str();
    }
  } catch (const std::exception& e) {
    limit_error = e.what();
  }

  return parallel_map<DirichletRow>(schedule.size(), opt.jobs, [&](std::size_t i) {
    const ScheduleEntry& s = schedule[i];
    DirichletRow row;
    row.entry = s;
    row.A = (s.a * s.a - alpha * alpha * (s.N - 2.0)) / s.a;
    row.hyp_cos = s.a * std::cos(s.theta) >= alpha * R - 1e-12 * std::max(1.0, std::abs(alpha * R));
    row.hyp_A = row.A <= opt.A_bound;
    if (!limit_error.empty()) {
      row.status = "error: half-line: " + limit_error;
      return row;
    }
    row.rhs = limit.lambda;
    row.residual_rhs = limit.residual;
    try {
      const EigenResult cap = cap_eigenvalue(CapProblem{s.N, s.a, s.theta, 0, 1}, opt.tol);
      row.residual_lhs = cap.residual;
      if (!(cap.residual <= opt.tol)) {
        std::ostringstream os;
        os << "error: cap residual " << cap.residual << " exceeds tol";
        row.status = os.str();
        return row;
      }
      row.lhs = cap.lambda;
      row.abs_err = std::abs(row.lhs - row.rhs);
    } catch (const std::exception& e) {
      row.status = std::string("error: cap: ") + e.what();
    }
    return row;
  });
}

EigenfunctionComparison eigenfunction_comparison(double alpha, double R, unsigned N, double tol,
                                                 unsigned order, unsigned panels) {
  if (order == 0 || panels == 0) {
    throw std::invalid_argument("eigenfunction comparison: order and panels must be positive");
  }
  const auto sched = default_schedule(alpha, R, {N});
  if (sched.empty()) throw std::invalid_argument("eigenfunction comparison: |alpha R| >= a_N");
  const ScheduleEntry s = sched.front();
  const CapProblem cap{N, s.a, s.theta, 0, 1};
  const HalflineProblem half{alpha, R, 0, 1, 14.0};
  const double lambda_N = cap_eigenvalue(cap, tol).lambda;
  const double lambda_inf = halfline_eigenvalue(half, tol).lambda;
  const CapEigenfunction hN(cap, lambda_N);
  const HalflineEigenfunction hinf(half, lambda_inf);

  // Gauss-Legendre nodes on [alpha R, alpha (R + 14)], split at a_N if it falls inside.
  const double lo = alpha * R, hi = hinf.truncation();
  std::vector<std::pair<double, double>> segments;
  if (s.a < hi) {
    segments = {{lo, s.a}, {s.a, hi}};
  } else {
    segments = {{lo, hi}};
  }
  const QuadratureRule& rule = cached_legendre(order);
  std::vector<double> nodes, weights;
  for (const auto& [a, b] : segments) {
    const double width = (b - a) / panels;
    for (unsigned p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * width;
      for (unsigned i = 0; i < order; ++i) {
        nodes.push_back(mid + 0.5 * width * rule.nodes[i]);
        weights.push_back(0.5 * width * rule.weights[i]);
      }
    }
  }
  const auto vN = hN.at_r(nodes);
  const auto vinf = hinf.at_r(nodes);
  const WeightProfile w(SphereSpec(N, s.a), alpha);
  const double a2 = s.a * s.a;
  double l2 = 0.0, h1 = 0.0, mass = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    const double gamma = w.gauss(r).value();
    double g = 0.0, dg = 0.0;
    if (r < s.a) {
      const double sN = w.s(r);
      const double root = std::exp(0.5 * (w.sphere(r).log() - w.gauss(r).log()));
      g = vN[i].h * sN * root;
      dg = vN[i].dh * sN * root + 0.5 * r * vN[i].h * root * (sN / (alpha * alpha) - (N + 2.0) / a2);
    }
    l2 += weights[i] * gamma * (g - vinf[i].h) * (g - vinf[i].h);
    h1 += weights[i] * gamma * (dg - vinf[i].dh) * (dg - vinf[i].dh);
    mass += weights[i] * gamma * vinf[i].h * vinf[i].h;
  }
  return {lambda_N, lambda_inf, std::sqrt(l2), std::sqrt(h1), mass};
}

}  // namespace s2g
