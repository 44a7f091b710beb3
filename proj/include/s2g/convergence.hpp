#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "s2g/eigensolve.hpp"

namespace s2g {

struct ClosedRow {
  unsigned N;
  unsigned k;
  mpq_class a2;       ///< alpha^2 (N - 1)
  mpq_class lhs;      ///< k (k + N - 1) / a^2
  mpq_class rhs;      ///< k / alpha^2
  mpq_class abs_err;  ///< |lhs - rhs|
  mpz_class dim_projected;  ///< d_k(n), dimension of the projected eigenspace
  mpz_class mult_sphere;    ///< full multiplicity on S^N
};

/// Exact rows for N in N_list (each N >= 2, n <= N) and k = 0..k_max, under
/// the schedule a^2 = alpha^2 (N - 1).
std::vector<ClosedRow> closed_spectrum_table(unsigned n, const mpq_class& alpha2, unsigned k_max,
                                             const std::vector<unsigned>& N_list);

struct ScheduleEntry {
  unsigned N;
  double a;
  double theta;
};

/// a_N = alpha sqrt(N-1), theta_N = arccos(alpha R / a_N). Entries with
/// |alpha R| >= a_N are left out and described in `skipped`.
std::vector<ScheduleEntry> default_schedule(double alpha, double R, const std::vector<unsigned>& N_list,
                                            std::vector<std::string>* skipped = nullptr);

struct DirichletRow {
  ScheduleEntry entry;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double residual_lhs = 0.0;
  double residual_rhs = 0.0;
  double A = 0.0;           ///< (a^2 - alpha^2 (N-2)) / a
  bool hyp_cos = false;     ///< a cos theta >= alpha R (to rounding)
  bool hyp_A = false;       ///< A <= A_bound
  std::string status = "ok";  ///< "ok" or "error: ..."
  bool ok() const { return status == "ok"; }
};

struct DirichletOptions {
  double tol = 1e-8;
  double A_bound = 10.0;
  double cutoff = 14.0;
  unsigned jobs = 0;
};

/// lhs = first cap eigenvalue for each schedule entry, rhs = first half-line
/// eigenvalue. A row whose solver fails or whose residual exceeds tol keeps its
/// hypothesis columns but carries an error status instead of numbers.
std::vector<DirichletRow> dirichlet_convergence_table(double alpha, double R,
                                                      const std::vector<ScheduleEntry>& schedule,
                                                      const DirichletOptions& opt);

struct EigenfunctionComparison {
  double lambda_N;
  double lambda_inf;
  double l2_distance;
  double h1_surrogate;  ///< L^2(gamma) distance of first derivatives on a fixed grid
  double gauss_mass;    ///< int h_inf^2 d gamma, should be 1
};

/// Compares h_N s_N sqrt(w_N / w_inf), extended by zero, with h_inf under gamma^1_alpha.
/// Composite Gauss-Legendre with `panels` panels of `order` nodes per segment.
EigenfunctionComparison eigenfunction_comparison(double alpha, double R, unsigned N, double tol,
                                                 unsigned order = 32, unsigned panels = 64);

}  // namespace s2g
