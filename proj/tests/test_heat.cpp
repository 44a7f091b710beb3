#include "doctest.h"

#include <cmath>
#include <sstream>

#include "s2g/heat.hpp"

using namespace s2g;

namespace {

SpectralCoefficients sample(double alpha) {
  SpectralCoefficients f;
  f.n = 2;
  f.basis = SpectralBasis::gauss(alpha);
  f.entries[MultiIndex{0, 0}] = 0.5;
  f.entries[MultiIndex{1, 0}] = 1.0;
  f.entries[MultiIndex{1, 1}] = -0.25;
  f.entries[MultiIndex{3, 3}] = 0.125;
  return f;
}

}  // namespace

TEST_CASE("heat evolution on Gaussian space") {
  const SpectralCoefficients f = sample(1.0);
  const auto same = heat_evolve(f, 0.0);
  CHECK(same.entries == f.entries);
  const auto g = heat_evolve(f, 1.0);
  CHECK(g.entries.at(MultiIndex{1, 1}) == doctest::Approx(-0.25 * std::exp(-2.0)).epsilon(1e-15));
  CHECK(g.entries.at(MultiIndex{0, 0}) == 0.5);
  const auto two = heat_evolve(heat_evolve(f, 0.3), 0.7);
  for (const auto& [K, v] : g.entries) CHECK(std::abs(two.entries.at(K) - v) < 1e-14);
  CHECK(l2_norm(g) < l2_norm(f));
  CHECK(energy(f) == doctest::Approx(1.0 + 2 * 0.0625 + 6 * 0.015625));
  CHECK_THROWS_AS(heat_evolve(f, -1.0), std::invalid_argument);
}

TEST_CASE("heat on the sphere and the distance to the Gaussian flow") {
  SpectralCoefficients f;
  f.n = 1;
  f.basis = SpectralBasis::gauss(1.0);
  f.entries[MultiIndex{2}] = 1.0;
  for (unsigned N : {10u, 100u, 1000u}) {
    // e^{-2(N+1)/(N-1)} vs e^{-2}
    SpectralCoefficients s = f;
    s.basis = SpectralBasis::sphere(N, std::sqrt(N - 1.0));
    const double v = heat_evolve(s, 1.0).entries.at(MultiIndex{2});
    CHECK(v == doctest::Approx(std::exp(-2.0 * (N + 1) / (N - 1))).epsilon(1e-14));
    const auto rows = heat_convergence_table(f, 1.0, {N});
    CHECK(rows[0].l2_distance <= 4 * std::exp(-2.0) / (N - 1));
    CHECK(rows[0].energy_sphere < rows[0].energy_gauss);
  }
  const auto rows = heat_convergence_table(sample(1.0), 1.0, {10, 100, 1000, 10000});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].l2_distance < rows[i - 1].l2_distance);
  CHECK(rows.back().l2_distance < 1e-3);
}

TEST_CASE("heat flow is monotone in time") {
  const SpectralCoefficients f = sample(1.5);
  double prev_norm = l2_norm(f), prev_energy = energy(f);
  for (double t = 0.25; t <= 2.0; t += 0.25) {
    const auto g = heat_evolve(f, t);
    CHECK(l2_norm(g) <= prev_norm);
    CHECK(energy(g) <= prev_energy);
    prev_norm = l2_norm(g);
    prev_energy = energy(g);
  }
}

TEST_CASE("Cheeger recovery sequence") {
  SpectralCoefficients f;
  f.n = 1;
  f.basis = SpectralBasis::gauss(1.0);
  f.entries[MultiIndex{3}] = 0.7;
  for (unsigned N : {10u, 100u, 1000u}) {
    const auto row = cheeger_table(f, {N})[0];
    CHECK(row.energy_gauss == doctest::Approx(3 * 0.49).epsilon(1e-15));
    CHECK(std::abs(row.energy_recovery - row.energy_gauss) <= 1e-12 * row.energy_gauss);
    CHECK(row.rel_err <= 1e-12);
    // ||g_N||^2 / ||f||^2 - 1 = (|K| - ... ) relative defect bounded by |K|/(N-1)
    CHECK(std::abs(row.l2_recovery / row.l2_gauss - 1) <= 3.0 / (N - 1));
    CHECK(row.energy_fixed >= row.energy_gauss);
  }
  const auto rows = cheeger_table(sample(2.0), {10, 100, 1000});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].defect < rows[i - 1].defect);
}

TEST_CASE("coefficient files") {
  std::istringstream in("# comment\n1 0 0.5\n\n0 2 -1\n1 0 0.25\n");
  const SpectralCoefficients c = parse_coefficients(in, 1.0);
  CHECK(c.n == 2);
  CHECK(c.entries.size() == 2);
  CHECK(c.entries.at(MultiIndex{1, 0}) == 0.75);
  std::istringstream mixed("1 0 0.5\n1 2 0 1\n");
  CHECK_THROWS_AS(parse_coefficients(mixed, 1.0), std::invalid_argument);
  std::istringstream bad("1 x 0.5\n");
  CHECK_THROWS_AS(parse_coefficients(bad, 1.0), std::invalid_argument);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_coefficients(empty, 1.0), std::invalid_argument);
}
