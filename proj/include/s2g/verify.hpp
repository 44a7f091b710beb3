#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "s2g/indices.hpp"

namespace s2g {

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned jobs = 0;
  unsigned quad_order = 48;
};

struct SuiteResult {
  bool pass = false;
  std::string summary;  ///< "PASS harmonicity n<=4 N<=16 |K|<=6" style line
  std::string detail;   ///< first counterexample when failing
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

/// rank over Q of [Q_sphere(N, K, a2)(x_p)] for K in N_0^n(k) and d_k(n) + 8
/// pseudo-random rational points x_p (deterministic in `seed`).
std::size_t projected_eigenspace_rank(unsigned N, unsigned n, unsigned k, const mpq_class& a2,
                                      std::uint64_t seed = 42);

/// Parses "3", "-1.25", "2.5e-3" or "7/4" into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace s2g
