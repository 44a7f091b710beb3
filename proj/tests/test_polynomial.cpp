#include "doctest.h"

#include <random>

#include "s2g/polynomial.hpp"

using namespace s2g;

namespace {

RationalPoly x(std::size_t nvars, std::size_t i) { return RationalPoly::variable(nvars, i); }
RationalPoly c(std::size_t nvars, const mpq_class& v) { return RationalPoly::constant(nvars, v); }

RationalPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), deg(0, static_cast<int>(max_degree));
  RationalPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars);
    for (auto& v : e) v = static_cast<unsigned>(deg(rng));
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    p.add_term(MultiIndex(e), q);
  }
  return p;
}

bool canonical(const RationalPoly& p) {
  for (const auto& [e, v] : p.terms()) {
    if (v == 0 || e.size() != p.nvars()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Laplacian examples") {
  CHECK(laplacian(x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1)).is_zero());
  CHECK(laplacian(x(2, 0) * x(2, 1)).is_zero());
  const RationalPoly x4 = pow(x(1, 0), 4);
  CHECK(laplacian(x4) == c(1, 12) * x(1, 0) * x(1, 0));
  CHECK(laplacian_power(x4, 2, 1) == c(1, 24));
}

TEST_CASE("lifted Laplacian on the t slot") {
  const unsigned n = 2, N = 4;
  const LiftedPoly t = LiftedPoly::t_slot(n, N);
  CHECK(lifted_laplacian(t).base() == c(3, 2 * (N - n + 1)));
  CHECK(lifted_laplacian(LiftedPoly(x(3, 0), n, N)).is_zero());
  const LiftedPoly t2(t.base() * t.base(), n, N);
  CHECK(lifted_laplacian(t2).base() == c(3, 4 * (N - n + 3)) * t.base());
}

TEST_CASE("lifted Laplacian agrees with expanding |y|^2 = sum y_i^2") {
  // n = 1, N = 3, so y has N - n + 1 = 3 coordinates; ring (x, y1, y2, y3).
  std::mt19937_64 rng(7);
  const unsigned n = 1, N = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const RationalPoly base = random_poly(rng, 2, 3, 5);
    const RationalPoly lap = lifted_laplacian(LiftedPoly(base, n, N)).base();
    RationalPoly ysq(4);
    for (std::size_t i = 1; i <= 3; ++i) ysq += x(4, i) * x(4, i);
    auto expand = [&](const RationalPoly& p) {
      return substitute(extend_vars(p, 4), 1, ysq);
    };
    CHECK(laplacian(expand(base)) == expand(lap));
  }
}

TEST_CASE("Euler pairing") {
  CHECK(euler_pairing(x(2, 0) * x(2, 0) * x(2, 1)) == c(2, 3) * x(2, 0) * x(2, 0) * x(2, 1));
  CHECK(euler_pairing(c(2, 5)).is_zero());
  CHECK(euler_pairing(x(2, 0) * x(2, 0) + x(2, 1)) == c(2, 2) * x(2, 0) * x(2, 0) + x(2, 1));
}

TEST_CASE("evaluate") {
  const RationalPoly p = x(1, 0) * x(1, 0) - c(1, 1);
  CHECK(evaluate<mpq_class>(p, std::vector<mpq_class>{2}) == 3);
  CHECK(evaluate<mpq_class>(p, std::vector<mpq_class>{1}) == 0);
  CHECK(evaluate<mpq_class>(x(2, 0) * x(2, 1), std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 3)}) ==
        mpq_class(1, 6));
  CHECK_THROWS_AS(evaluate<double>(p, std::vector<double>{1.0, 2.0}), std::invalid_argument);
  const NumericPoly np(p);
  const double at[] = {2.0};
  CHECK(np(at) == doctest::Approx(3.0));
}

TEST_CASE("ring axioms and canonical form on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalPoly a = random_poly(rng, 3, 3, 6), b = random_poly(rng, 3, 3, 6), d = random_poly(rng, 3, 2, 4);
    CHECK((a - a).is_zero());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a * b) * d == a * (b * d));
    CHECK(canonical(a * b - b * d));
    CHECK(laplacian(a + b) == laplacian(a) + laplacian(b));
    // evaluation is a ring homomorphism
    const std::vector<mpq_class> pt{mpq_class(1, 3), mpq_class(-2), mpq_class(5, 7)};
    CHECK(evaluate<mpq_class>(a * b, pt) == evaluate<mpq_class>(a, pt) * evaluate<mpq_class>(b, pt));
  }
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(3);
  const auto names = default_variable_names(3);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalPoly p = random_poly(rng, 3, 4, 6);
    CHECK(parse_text(to_text(p, names), names) == p);
  }
  CHECK(to_text(RationalPoly(2)) == "0 * 1\n");
  const RationalPoly q = c(2, mpq_class(-3, 4)) * x(2, 0) * x(2, 0) * x(2, 1) + c(2, 2);
  CHECK(to_text(q) == "-3/4 * x1^2 x2^1\n2 * 1\n");
}

TEST_CASE("restriction to the sphere substitutes t = a^2 - |x|^2") {
  const unsigned n = 2, N = 5;
  const RationalPoly base = x(3, 0) * x(3, 0) + c(3, 3) * x(3, 2) * x(3, 1);
  const RationalPoly r = restrict_to_sphere(LiftedPoly(base, n, N), mpq_class(7, 2));
  const RationalPoly expected = x(2, 0) * x(2, 0) + c(2, 3) * (c(2, mpq_class(7, 2)) - squared_norm(2, 2)) * x(2, 1);
  CHECK(r == expected);
  CHECK(LiftedPoly(base, n, N).weighted_degree() == -1);
  CHECK(LiftedPoly(x(3, 0) * x(3, 0) + x(3, 2), n, N).weighted_degree() == 2);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}) == 3);
  CHECK(exact_rank({{mpq_class(1, 3), mpq_class(1, 2)}, {mpq_class(2, 3), 1}}) == 1);
  CHECK(exact_rank({}) == 0);
}

TEST_CASE("mismatched arity is rejected") {
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(LiftedPoly(x(2, 0), 2, 4), std::invalid_argument);
}
