#include "s2g/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "s2g/convergence.hpp"
#include "s2g/geometry.hpp"
#include "s2g/harmonics.hpp"
#include "s2g/parallel.hpp"
#include "s2g/polynomial.hpp"
#include "s2g/quadrature.hpp"

namespace s2g {

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (s.empty()) throw bad();
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || mpz_class(q.get_den()) == 0) throw bad();
    q.canonicalize();
    return q;
  }
  // decimal with optional exponent
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) --scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw bad();
    const std::string ex = s.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(ex, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != ex.size() || std::abs(e) > 10000) throw bad();
    scale += e;
  }
  mpq_class q{mpz_class(digits, 10)};
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
  if (scale >= 0) {
    q *= ten_power;
  } else {
    q /= ten_power;
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::size_t projected_eigenspace_rank(unsigned N, unsigned n, unsigned k, const mpq_class& a2,
                                      std::uint64_t seed) {
  const auto basis = enumerate_multi_indices(n, k);
  const std::size_t d = basis.size();
  std::mt19937_64 rng(seed ^ (0x9e37ULL * N + 0x85ebULL * n + k));
  // extra points make an accidental common zero of the span vanishingly unlikely
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::vector<std::vector<mpq_class>> points(d + 8, std::vector<mpq_class>(n));
  for (auto& p : points) {
    for (auto& c : p) {
      c = mpq_class(num(rng), 1009);
      c.canonicalize();
    }
  }
  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(d);
  for (const MultiIndex& K : basis) {
    const RationalPoly q = build_Q_sphere(N, K, a2);
    std::vector<mpq_class> row;
    row.reserve(points.size());
    for (const auto& p : points) row.push_back(evaluate<mpq_class>(q, p));
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

namespace {

struct Case {
  unsigned n;
  unsigned N;
};

SuiteResult finish(bool pass, const std::string& name, const std::string& scope, std::string detail) {
  return {pass, std::string(pass ? "PASS " : "FAIL ") + name + " " + scope, std::move(detail)};
}

// Runs check(i) for i < count in parallel; returns the first failure message.
template <typename Check>
std::string first_failure(std::size_t count, unsigned jobs, Check&& check) {
  const auto results = parallel_map<std::string>(count, jobs, check);
  for (const auto& r : results) {
    if (!r.empty()) return r;
  }
  return {};
}

std::string describe(const MultiIndex& K) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < K.size(); ++i) os << (i ? "," : "") << K[i];
  os << ')';
  return os.str();
}

SuiteResult suite_harmonicity(const VerifyOptions& opt) {
  std::vector<Case> cases;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned N = n; N <= 16; ++N) cases.push_back({n, N});
  }
  const std::string fail = first_failure(cases.size(), opt.jobs, [&](std::size_t i) -> std::string {
    const auto [n, N] = cases[i];
    for (const MultiIndex& K : enumerate_multi_indices_up_to(n, 6)) {
      if (!check_harmonic(build_P(N, K)).harmonic) {
        return "not harmonic: N=" + std::to_string(N) + " K=" + describe(K);
      }
    }
    return {};
  });
  return finish(fail.empty(), "harmonicity", "n<=4 N<=16 |K|<=6", fail);
}

SuiteResult suite_ou(const VerifyOptions& opt) {
  const std::vector<mpq_class> alphas{mpq_class(1), mpq_class(2), mpq_class(1, 2)};
  const std::string fail = first_failure(4 * alphas.size(), opt.jobs, [&](std::size_t i) -> std::string {
    const unsigned n = static_cast<unsigned>(i / alphas.size()) + 1;
    const mpq_class& alpha2 = alphas[i % alphas.size()];
    for (const MultiIndex& K : enumerate_multi_indices_up_to(n, 6)) {
      const RationalPoly q = build_Q_gauss(K, alpha2);
      const RationalPoly expected = q * mpq_class(-mpq_class(K.order()) / alpha2);
      if (!(ou_apply(q, alpha2) == expected)) {
        return "OU identity fails: K=" + describe(K) + " alpha^2=" + alpha2.get_str();
      }
    }
    return {};
  });
  return finish(fail.empty(), "ou-identity", "n<=4 |K|<=6 alpha^2 in {1,2,1/2}", fail);
}

SuiteResult suite_dimension(const VerifyOptions& opt) {
  std::vector<Case> cases;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned N = std::max(n, 2u); N <= 12; ++N) cases.push_back({n, N});
  }
  const std::string fail = first_failure(cases.size(), opt.jobs, [&](std::size_t i) -> std::string {
    const auto [n, N] = cases[i];
    for (unsigned k = 0; k <= 5; ++k) {
      const std::size_t rank = projected_eigenspace_rank(N, n, k, mpq_class(N - 1), opt.seed);
      if (mpz_class(rank) != gauss_multiplicity(n, k)) {
        return "rank " + std::to_string(rank) + " != d_k(n) at n=" + std::to_string(n) +
               " N=" + std::to_string(N) + " k=" + std::to_string(k);
      }
    }
    return {};
  });
  return finish(fail.empty(), "dimension", "n<=4 N<=12 k<=5", fail);
}

SuiteResult suite_error_law(const VerifyOptions& opt) {
  const std::vector<mpq_class> alphas{mpq_class(1), mpq_class(2), mpq_class(1, 2)};
  constexpr unsigned kMaxN = 10000;
  const std::string fail = first_failure(alphas.size(), opt.jobs, [&](std::size_t i) -> std::string {
    const mpq_class& alpha2 = alphas[i];
    std::vector<unsigned> Ns;
    for (unsigned N = 2; N <= kMaxN; ++N) Ns.push_back(N);
    for (const ClosedRow& row : closed_spectrum_table(1, alpha2, 8, Ns)) {
      const mpq_class law = mpq_class(row.k * row.k) / (alpha2 * (row.N - 1));
      if (!(row.lhs - row.rhs == law)) {
        return "error law fails at N=" + std::to_string(row.N) + " k=" + std::to_string(row.k);
      }
    }
    return {};
  });
  return finish(fail.empty(), "error-law", "k<=8 N<=10000 alpha^2 in {1,2,1/2}", fail);
}

SuiteResult suite_hermite(const VerifyOptions&) {
  // Rodrigues: He_k = (-1)^k e^{r^2/2} d^k/dr^k e^{-r^2/2} = (-1)^k p_k with
  // p_0 = 1, p_{k+1} = p_k' - r p_k.
  const RationalPoly r = RationalPoly::variable(1, 0);
  RationalPoly p = RationalPoly::constant(1, 1);
  for (unsigned k = 0; k <= 12; ++k) {
    const RationalPoly rodrigues = k % 2 == 0 ? p : -p;
    if (!(hermite(k) == rodrigues)) return finish(false, "hermite", "k<=12", "He_" + std::to_string(k));
    p = derivative(p, 0) - r * p;
  }
  const std::vector<mpq_class> alphas{mpq_class(1), mpq_class(2), mpq_class(1, 2), mpq_class(9, 4)};
  for (const mpq_class& alpha2 : alphas) {
    for (unsigned k = 0; k <= 12; ++k) {
      // alpha^k He_k(x/alpha) has coefficient h_i alpha^{k-i}, k-i even.
      const RationalPoly he = hermite(k);
      RationalPoly expected(1);
      for (const auto& [e, c] : he.terms()) {
        mpq_class factor = 1;
        for (unsigned s = 0; s < (k - e[0]) / 2; ++s) factor *= alpha2;
        expected.add_term(e, c * factor);
      }
      if (!(build_Q_gauss(MultiIndex{k}, alpha2) == expected)) {
        return finish(false, "hermite", "k<=12", "Q_gauss link fails at k=" + std::to_string(k));
      }
    }
  }
  return finish(true, "hermite", "k<=12", {});
}

SuiteResult suite_substitution(const VerifyOptions& opt) {
  std::vector<Case> cases;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned N = n; N <= 16; ++N) cases.push_back({n, N});
  }
  const std::string fail = first_failure(cases.size(), opt.jobs, [&](std::size_t i) -> std::string {
    const auto [n, N] = cases[i];
    for (const mpq_class& a2 : {mpq_class(N), mpq_class(3, 2)}) {
      const RationalPoly s = RationalPoly::constant(n, a2) - squared_norm(n, n);
      for (const MultiIndex& K : enumerate_multi_indices_up_to(n, 6)) {
        RationalPoly direct(n);
        RationalPoly term = RationalPoly::monomial(K);
        RationalPoly s_power = RationalPoly::constant(n, 1);
        for (unsigned j = 0; !term.is_zero(); ++j) {
          direct += s_power * term * coeff_C(j, static_cast<long>(N) - n);
          term = laplacian(term);
          s_power *= s;
        }
        if (!(build_Q_sphere(N, K, a2) == direct)) {
          return "substitution fails: N=" + std::to_string(N) + " K=" + describe(K);
        }
      }
    }
    return {};
  });
  return finish(fail.empty(), "substitution", "n<=4 N<=16 |K|<=6", fail);
}

SuiteResult suite_orthogonality(const VerifyOptions& opt) {
  constexpr unsigned N = 6;
  constexpr std::size_t samples = 200000;
  const double a = std::sqrt(N - 1.0);
  const LiftedPoly one = LiftedPoly::from_horizontal(RationalPoly::constant(2, 1), N);
  std::uint64_t stream = 0;
  for (const MultiIndex& K : enumerate_multi_indices_up_to(2, 3)) {
    if (K.order() == 0) continue;
    const LiftedPoly P = build_P(N, K);
    const NumericPoly f(P.base());
    SphereSampler sampler(SphereSpec(N, a), opt.seed, stream++);
    const auto mc = monte_carlo_mean(
        [&](std::span<const double> z) {
          double t = 0.0;
          for (std::size_t i = 2; i < z.size(); ++i) t += z[i] * z[i];
          const double x[] = {z[0], z[1], t};
          return f(x);
        },
        sampler, samples);
    const double quad = sphere_inner_product(P, one, a, opt.quad_order);
    const double norm = std::sqrt(sphere_inner_product(P, P, a, opt.quad_order) *
                                  std::exp(sphere_volume_log(N, a)));
    if (std::abs(mc.mean) > 3.0 * mc.std_error || std::abs(quad) > 1e-9 * norm) {
      std::ostringstream os;
      os << "K=" << describe(K) << " mc mean " << mc.mean << " +- " << mc.std_error << ", quadrature "
         << quad;
      return finish(false, "orthogonality", "N=6 n=2 1<=|K|<=3", os.str());
    }
  }
  return finish(true, "orthogonality", "N=6 n=2 1<=|K|<=3", {});
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"harmonicity", "ou-identity", "dimension", "error-law", "hermite", "substitution",
          "orthogonality"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "harmonicity") return suite_harmonicity(opt);
  if (name == "ou-identity") return suite_ou(opt);
  if (name == "dimension") return suite_dimension(opt);
  if (name == "error-law") return suite_error_law(opt);
  if (name == "hermite") return suite_hermite(opt);
  if (name == "substitution") return suite_substitution(opt);
  if (name == "orthogonality") return suite_orthogonality(opt);
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

}  // namespace s2g
