#pragma once

#include <gmpxx.h>

#include "s2g/indices.hpp"
#include "s2g/polynomial.hpp"

namespace s2g {

/// c_j(m) = -1/(2j(m+2j-1)) multiplied out: C_j(m) = c_1(m) ... c_j(m), C_0 = 1.
/// Throws std::domain_error if some factor has a zero denominator.
mpq_class coeff_C(unsigned j, long m);

/// Harmonic lift of x^K to R^{N+1}:
///   P = sum_j C_j(N-n) t^j Delta^j x^K,  t = |y|^2.
LiftedPoly build_P(unsigned N, const MultiIndex& K);

/// P with t replaced by a^2 - |x|^2, a polynomial on R^n.
RationalPoly build_Q_sphere(unsigned N, const MultiIndex& K, const mpq_class& a2);

/// sum_j (-1)^j alpha^{2j} / (2^j j!) Delta^j x^K. The Ornstein-Uhlenbeck
/// eigenfunction with eigenvalue -|K|/alpha^2.
RationalPoly build_Q_gauss(const MultiIndex& K, const mpq_class& alpha2);

/// Probabilists' Hermite polynomial He_k in one variable.
RationalPoly hermite(unsigned k);

/// sum_j (a^2 - |x|^2)^j C_j(N-n) Delta'^j x'^K on R^n, where x = (x_1, x')
/// and K has length n-1. Requires 2 <= n <= N.
RationalPoly build_R(unsigned N, const MultiIndex& K, const mpq_class& a2);

struct HarmonicCheck {
  bool harmonic;
  LiftedPoly residual;
};

HarmonicCheck check_harmonic(const LiftedPoly& p);

/// Delta q - (1/alpha^2) <x, grad q>.
RationalPoly ou_apply(const RationalPoly& q, const mpq_class& alpha2);

struct HarmonicLiftFamily {
  unsigned N;
  MultiIndex K;
  LiftedPoly P;
  RationalPoly Q_sphere;
  RationalPoly Q_gauss;
};

HarmonicLiftFamily build_family(unsigned N, const MultiIndex& K, const mpq_class& a2,
                                const mpq_class& alpha2);

}  // namespace s2g
