#include "s2g/harmonics.hpp"

#include <stdexcept>
#include <string>

namespace s2g {

mpq_class coeff_C(unsigned j, long m) {
  mpq_class c = 1;
  for (unsigned l = 1; l <= j; ++l) {
    const long denom = 2L * l * (m + 2L * l - 1);
    if (denom == 0) {
      throw std::domain_error("coeff_C: zero denominator at l=" + std::to_string(l) +
                              ", m=" + std::to_string(m));
    }
    // mpq_mul needs canonical operands; denom may be negative
    mpq_class f(-1, denom);
    f.canonicalize();
    c *= f;
  }
  return c;
}

namespace {

void require_valid(unsigned N, const MultiIndex& K) {
  if (K.size() == 0) throw std::invalid_argument("harmonic lift: empty multi-index");
  if (K.size() > N) throw std::invalid_argument("harmonic lift: requires n <= N");
}

// t^j * p, where t is the last variable of p's ring.
RationalPoly times_t_power(const RationalPoly& p, unsigned j) {
  RationalPoly out(p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    MultiIndex e = exps;
    e[p.nvars() - 1] += j;
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

LiftedPoly build_P(unsigned N, const MultiIndex& K) {
  require_valid(N, K);
  const auto n = static_cast<unsigned>(K.size());
  const long m = static_cast<long>(N) - n;
  std::vector<unsigned> lifted(K.entries());
  lifted.push_back(0);
  RationalPoly power = RationalPoly::monomial(MultiIndex(lifted));
  RationalPoly base(n + 1);
  for (unsigned j = 0; !power.is_zero(); ++j) {
    base += times_t_power(power, j) * coeff_C(j, m);
    power = laplacian(power, n);
  }
  return LiftedPoly(std::move(base), n, N);
}

RationalPoly build_Q_sphere(unsigned N, const MultiIndex& K, const mpq_class& a2) {
  if (a2 <= 0) throw std::invalid_argument("build_Q_sphere: a^2 must be positive");
  return restrict_to_sphere(build_P(N, K), a2);
}

RationalPoly build_Q_gauss(const MultiIndex& K, const mpq_class& alpha2) {
  if (alpha2 <= 0) throw std::invalid_argument("build_Q_gauss: alpha^2 must be positive");
  RationalPoly power = RationalPoly::monomial(K);
  RationalPoly out(K.size());
  mpq_class coeff = 1;
  for (unsigned j = 0; !power.is_zero(); ++j) {
    if (j > 0) coeff *= -alpha2 / mpq_class(2 * j);
    out += power * coeff;
    power = laplacian(power);
  }
  return out;
}

RationalPoly hermite(unsigned k) {
  RationalPoly prev = RationalPoly::constant(1, 1);
  if (k == 0) return prev;
  const RationalPoly r = RationalPoly::variable(1, 0);
  RationalPoly cur = r;
  for (unsigned i = 1; i < k; ++i) {
    RationalPoly next = r * cur - prev * mpq_class(i);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPoly build_R(unsigned N, const MultiIndex& K, const mpq_class& a2) {
  const std::size_t n = K.size() + 1;
  if (n < 2 || n > N) throw std::invalid_argument("build_R: requires 2 <= n <= N");
  const long m = static_cast<long>(N) - static_cast<long>(n);
  // x' occupies variables 1..n-1; x_1 is variable 0.
  std::vector<unsigned> e{0};
  e.insert(e.end(), K.entries().begin(), K.entries().end());
  RationalPoly power = RationalPoly::monomial(MultiIndex(e));
  const RationalPoly s = RationalPoly::constant(n, a2) - squared_norm(n, n);
  RationalPoly s_power = RationalPoly::constant(n, 1);
  RationalPoly out(n);
  for (unsigned j = 0; !power.is_zero(); ++j) {
    out += s_power * power * coeff_C(j, m);
    // Delta over x' only: shift the variable block by differentiating directly.
    RationalPoly next(n);
    for (std::size_t i = 1; i < n; ++i) next += derivative(derivative(power, i), i);
    power = std::move(next);
    s_power *= s;
  }
  return out;
}

HarmonicCheck check_harmonic(const LiftedPoly& p) {
  LiftedPoly residual = lifted_laplacian(p);
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

RationalPoly ou_apply(const RationalPoly& q, const mpq_class& alpha2) {
  if (alpha2 <= 0) throw std::invalid_argument("ou_apply: alpha^2 must be positive");
  return laplacian(q) - euler_pairing(q) * (1 / alpha2);
}

HarmonicLiftFamily build_family(unsigned N, const MultiIndex& K, const mpq_class& a2,
                                const mpq_class& alpha2) {
  LiftedPoly P = build_P(N, K);
  RationalPoly qs = restrict_to_sphere(P, a2);
  return {N, K, std::move(P), std::move(qs), build_Q_gauss(K, alpha2)};
}

}  // namespace s2g
