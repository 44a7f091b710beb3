#include "doctest.h"

#include <cmath>
#include <numbers>

#include "s2g/eigensolve.hpp"
#include "s2g/geometry.hpp"
#include "s2g/quadrature.hpp"

using namespace s2g;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

TEST_CASE("hemisphere: N / a^2") {
  for (unsigned N : {2u, 3u, 5u, 12u, 40u}) {
    for (double a : {1.0, 0.5, std::sqrt(N - 1.0)}) {
      const EigenResult r = cap_eigenvalue(CapProblem{N, a, kHalfPi}, 1e-9);
      CHECK(std::abs(r.lambda - N / (a * a)) < 1e-8);
      CHECK(r.residual <= 1e-8);
      CHECK(r.zeros == 0);
    }
  }
}

TEST_CASE("hemisphere eigenfunction is cos of the geodesic distance") {
  // phi(vartheta) = cos(vartheta/a) = r/a in the radial coordinate
  const double a = 1.0;
  const EigenResult r = cap_eigenvalue(CapProblem{5, a, kHalfPi}, 1e-9);
  REQUIRE(r.coordinate == SampleCoordinate::radial);
  double vmax = 0.0;
  for (const auto& [x, v] : r.samples) vmax = std::max(vmax, std::abs(x / a));
  for (const auto& [x, v] : r.samples) CHECK(std::abs(v - (x / a) / vmax) < 1e-7);
  CHECK(ode_residual(r, CapProblem{5, a, kHalfPi}) < 1e-7);

  EigenResult wrong = r;
  wrong.lambda += 0.1;
  CHECK(ode_residual(wrong, CapProblem{5, a, kHalfPi}) > 1e-3);
}

TEST_CASE("scaling in the radius") {
  for (const auto& [N, theta, k, j] : {std::tuple{3u, 0.7, 0u, 1u}, std::tuple{6u, 1.2, 1u, 1u},
                                       std::tuple{4u, 2.0, 0u, 2u}, std::tuple{10u, 0.4, 2u, 1u}}) {
    const double unit = cap_eigenvalue(CapProblem{N, 1.0, theta, k, j}, 1e-10).lambda;
    for (double a : {0.3, 2.0, 7.5}) {
      const double scaled = cap_eigenvalue(CapProblem{N, a, theta, k, j}, 1e-10).lambda;
      CHECK(std::abs(scaled * a * a - unit) < 1e-8 * std::max(1.0, unit));
    }
  }
}

TEST_CASE("hemisphere with angular degree k") {
  for (unsigned N : {3u, 6u}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const double a = 1.5;
      const EigenResult r = cap_eigenvalue(CapProblem{N, a, kHalfPi, k, 1}, 1e-9);
      CHECK(std::abs(r.lambda - (k + 1.0) * (k + N) / (a * a)) < 1e-7);
      CHECK(r.residual <= 1e-8);
      CHECK(r.coordinate == SampleCoordinate::geodesic);
    }
  }
}

TEST_CASE("Sturm oscillation on caps") {
  for (unsigned j = 1; j <= 4; ++j) {
    const EigenResult r = cap_eigenvalue(CapProblem{4, 1.0, 2.0, 0, j}, 1e-9);
    CHECK(r.zeros == j - 1);
    CHECK(r.residual <= 1e-8);
  }
  double prev = 0.0;
  for (unsigned j = 1; j <= 4; ++j) {
    const double l = cap_eigenvalue(CapProblem{7, 1.0, 1.0, 1, j}, 1e-9).lambda;
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("cap eigenvalue decreases as the cap grows") {
  double prev = 1e300;
  for (double theta = 0.3; theta < 3.0; theta += 0.4) {
    const double l = cap_eigenvalue(CapProblem{5, 1.0, theta}, 1e-9).lambda;
    CHECK(l < prev);
    prev = l;
  }
}

TEST_CASE("half-line spectrum at R = 0") {
  for (double alpha : {1.0, 2.0, 0.6}) {
    for (unsigned j = 1; j <= 4; ++j) {
      const EigenResult r = halfline_eigenvalue(HalflineProblem{alpha, 0.0, 0, j}, 1e-9);
      CHECK(std::abs(r.lambda - (2.0 * j - 1) / (alpha * alpha)) < 1e-6);
      CHECK(r.zeros == j - 1);
      CHECK(r.residual <= 1e-8);
    }
  }
}

TEST_CASE("half-line eigenfunction at R = 0 is linear") {
  const double alpha = 1.3;
  const HalflineProblem p{alpha, 0.0};
  const EigenResult r = halfline_eigenvalue(p, 1e-9);
  CHECK(ode_residual(r, p) < 1e-7);
  // h(r) = r, compared after matching at the first interior sample
  const auto& s = r.samples;
  const double scale = s[10].second / s[10].first;
  for (std::size_t i = 0; i < s.size() / 4; ++i) CHECK(std::abs(s[i].second - scale * s[i].first) < 1e-7);
}

TEST_CASE("angular shift on the half-line is exactly k / alpha^2") {
  for (double R : {-0.5, 0.0, 1.0}) {
    const double alpha = 1.4;
    const double base = halfline_eigenvalue(HalflineProblem{alpha, R, 0, 1}, 1e-10).lambda;
    for (unsigned k = 1; k <= 3; ++k) {
      const double shifted = halfline_eigenvalue(HalflineProblem{alpha, R, k, 1}, 1e-10).lambda;
      CHECK(std::abs(shifted - base - k / (alpha * alpha)) < 1e-12);
    }
  }
}

TEST_CASE("half-line eigenvalue increases with R") {
  double prev = 0.0;
  for (double R : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
    const double l = halfline_eigenvalue(HalflineProblem{1.0, R}, 1e-9).lambda;
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("short truncation is detected") {
  CHECK_THROWS_AS(halfline_eigenvalue(HalflineProblem{1.0, 0.0, 0, 4, 4.0}, 1e-9), SolverError);
}

TEST_CASE("invalid problems are rejected") {
  CHECK_THROWS_AS(cap_eigenvalue(CapProblem{1, 1.0, 1.0}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(cap_eigenvalue(CapProblem{3, 1.0, 0.0}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(cap_eigenvalue(CapProblem{3, 1.0, std::numbers::pi}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(cap_eigenvalue(CapProblem{3, -1.0, 1.0}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(cap_eigenvalue(CapProblem{3, 1.0, 1.0, 0, 0}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(cap_eigenvalue(CapProblem{3, 1.0, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(halfline_eigenvalue(HalflineProblem{0.0, 0.0}, 1e-8), std::invalid_argument);
}

TEST_CASE("Friedland-Hayman exponent") {
  for (unsigned N = 2; N <= 12; ++N) CHECK(std::abs(nu_of_s(N, 0.5, 1e-9) - 1.0) < 1e-7);
  for (double s : {0.3, 0.7}) {
    double prev = 1e300;
    for (unsigned N = 2; N <= 12; ++N) {
      const double v = nu_of_s(N, s, 1e-9);
      CHECK(v <= prev + 1e-9);
      prev = v;
    }
  }
  CHECK(cap_volume_fraction(6, cap_angle_for_fraction(6, 0.3)) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(nu_of_s(3, 1.2, 1e-8), std::invalid_argument);
}

TEST_CASE("cap eigenfunctions: closed form at R = 0") {
  // hemisphere, a^2 = N - 1: h(r) = sqrt(2(N+1)) r / a
  for (unsigned N : {5u, 20u}) {
    const double a = std::sqrt(N - 1.0);
    const CapProblem p{N, a, kHalfPi};
    const CapEigenfunction h(p, N / (a * a));
    std::vector<double> r{0.3 * a, 0.5 * a, 0.9 * a};
    const auto v = h.at_r(r);
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(v[i].h == doctest::Approx(std::sqrt(2.0 * (N + 1)) * r[i] / a).epsilon(1e-8));
      CHECK(v[i].dh == doctest::Approx(std::sqrt(2.0 * (N + 1)) / a).epsilon(1e-7));
    }
    CHECK(h.energy() == doctest::Approx(N / (a * a)).epsilon(1e-8));
    const std::vector<double> outside{-0.1, a * 1.01};
    for (const auto& pt : h.at_r(outside)) CHECK(pt.h == 0.0);
  }
}

TEST_CASE("half-line eigenfunction: closed form at R = 0") {
  const double alpha = 1.7;
  const HalflineProblem p{alpha, 0.0};
  const HalflineEigenfunction h(p, 1 / (alpha * alpha));
  const std::vector<double> r{-1.0, 0.2, 1.0, 5.0, 30.0};
  const auto v = h.at_r(r);
  CHECK(v[0].h == 0.0);
  for (std::size_t i = 1; i < r.size(); ++i) {
    CHECK(v[i].h == doctest::Approx(std::sqrt(2.0) * r[i] / alpha).epsilon(1e-8));
    CHECK(v[i].dh == doctest::Approx(std::sqrt(2.0) / alpha).epsilon(1e-8));
  }
}

TEST_CASE("cap eigenfunction normalization, generic cap") {
  const unsigned N = 30;
  const double a = std::sqrt(N - 1.0), theta = std::acos(1.0 / a);
  const CapProblem p{N, a, theta};
  const double lambda = cap_eigenvalue(p, 1e-10).lambda;
  const CapEigenfunction h(p, lambda);
  const WeightProfile w(SphereSpec(N, a), 1.0);
  const double lo = a * std::cos(theta);
  auto mass = [&](double r) {
    const std::vector<double> x{r};
    const double v = h.at_r(x)[0].h;
    return v * v * w.sphere(r).value();
  };
  CHECK(integrate_refined(mass, lo, a, 1e-12) == doctest::Approx(1.0).epsilon(1e-8));
}
