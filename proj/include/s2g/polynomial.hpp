#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "s2g/indices.hpp"

namespace s2g {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no stored coefficient is zero and every
/// exponent vector has length nvars(), so equality is map equality.
class RationalPoly {
 public:
  using Terms = std::map<MultiIndex, mpq_class>;

  explicit RationalPoly(std::size_t nvars);

  static RationalPoly constant(std::size_t nvars, const mpq_class& c);
  /// The coordinate function x_{i+1} (0-based i).
  static RationalPoly variable(std::size_t nvars, std::size_t i);
  static RationalPoly monomial(const MultiIndex& exponents, const mpq_class& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  mpq_class coefficient(const MultiIndex& exponents) const;

  /// Adds c * x^exponents, pruning the term if it cancels.
  void add_term(const MultiIndex& exponents, const mpq_class& c);

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);
  RationalPoly& operator*=(const mpq_class& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const mpq_class& c) { return a *= c; }
  friend RationalPoly operator*(const mpq_class& c, RationalPoly a) { return a *= c; }
  RationalPoly operator-() const;

  bool operator==(const RationalPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void require_same_arity(const RationalPoly& other) const;

  std::size_t nvars_;
  Terms terms_;
};

RationalPoly pow(const RationalPoly& p, unsigned e);

/// d p / d x_{var+1}.
RationalPoly derivative(const RationalPoly& p, std::size_t var);

/// Sum of d^2/dx_i^2 over the first `first_vars` variables.
RationalPoly laplacian(const RationalPoly& p, std::size_t first_vars);
/// Sum of d^2/dx_i^2 over all variables.
RationalPoly laplacian(const RationalPoly& p);
/// Laplacian applied j times over the first `first_vars` variables.
RationalPoly laplacian_power(const RationalPoly& p, unsigned j, std::size_t first_vars);

/// <x, grad p> = sum_i x_i dp/dx_i; on a monomial x^J this is |J| x^J.
RationalPoly euler_pairing(const RationalPoly& p, std::size_t first_vars);
RationalPoly euler_pairing(const RationalPoly& p);

/// Replaces variable `var` by `value` (a polynomial in the same variables).
RationalPoly substitute(const RationalPoly& p, std::size_t var, const RationalPoly& value);

/// |x|^2 over the first `first_vars` variables of an nvars-variate ring.
RationalPoly squared_norm(std::size_t nvars, std::size_t first_vars);

/// Re-embeds p into a ring with more variables (new variables appended).
RationalPoly extend_vars(const RationalPoly& p, std::size_t nvars);

namespace detail {
template <typename Scalar>
Scalar from_rational(const mpq_class& q) {
  if constexpr (std::is_same_v<Scalar, mpq_class>) {
    return q;
  } else {
    return static_cast<Scalar>(q.get_d());
  }
}

template <typename Scalar>
Scalar int_power(const Scalar& base, unsigned e) {
  Scalar result(1);
  Scalar b(base);
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}
}  // namespace detail

/// Direct sparse evaluation; exact when Scalar is mpq_class.
template <typename Scalar>
Scalar evaluate(const RationalPoly& p, std::span<const Scalar> x) {
  if (x.size() != p.nvars()) {
    throw std::invalid_argument("evaluate: point has " + std::to_string(x.size()) +
                                " coordinates, polynomial has " + std::to_string(p.nvars()) +
                                " variables");
  }
  Scalar sum(0);
  for (const auto& [exps, c] : p.terms()) {
    Scalar term = detail::from_rational<Scalar>(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= detail::int_power(x[i], exps[i]);
    }
    sum += term;
  }
  return sum;
}

template <typename Scalar>
Scalar evaluate(const RationalPoly& p, const std::vector<Scalar>& x) {
  return evaluate<Scalar>(p, std::span<const Scalar>(x));
}

/// Double-precision snapshot of a RationalPoly for hot numerical loops.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const RationalPoly& p);

  std::size_t nvars() const { return nvars_; }
  double operator()(std::span<const double> x) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<double> coeffs_;
  std::vector<unsigned> exponents_;  // row-major, nvars_ per term
};

/// Polynomial in (x_1..x_n, t) where t stands for |y|^2, y in R^{N-n+1}.
/// Represents P(x, y) on R^{N+1} = R^n x R^{N-n+1}.
class LiftedPoly {
 public:
  LiftedPoly(RationalPoly base, unsigned n, unsigned N);

  /// Embeds a polynomial in x_1..x_n only (t-degree zero).
  static LiftedPoly from_horizontal(const RationalPoly& q, unsigned N);
  /// The polynomial t = |y|^2.
  static LiftedPoly t_slot(unsigned n, unsigned N);

  const RationalPoly& base() const { return base_; }
  unsigned n() const { return n_; }
  unsigned N() const { return N_; }
  std::size_t t_index() const { return n_; }
  bool is_zero() const { return base_.is_zero(); }

  /// x-degree + 2 * t-degree when every term agrees; -1 otherwise (or zero polynomial).
  long weighted_degree() const;

  bool operator==(const LiftedPoly& other) const = default;

 private:
  RationalPoly base_;
  unsigned n_;
  unsigned N_;
};

/// Laplacian on R^{N+1}: x-Laplacian plus the rule
/// Delta_{R^{N-n+1}} t^j = 2j(N-n+2j-1) t^{j-1} on the t-slot.
LiftedPoly lifted_laplacian(const LiftedPoly& p);

/// Substitutes t = a^2 - |x|^2, i.e. restricts P to the sphere S^N(a).
RationalPoly restrict_to_sphere(const LiftedPoly& p, const mpq_class& a2);

/// Exact rank over Q of a dense matrix of rationals (row-major rows).
std::size_t exact_rank(std::vector<std::vector<mpq_class>> rows);

/// Variable names used by the text format: x1..xn, plus "t" for lifted polys.
std::vector<std::string> default_variable_names(std::size_t nvars, bool lifted = false);

/// One "coeff * x1^a x2^b t^c" line per term, terms sorted by descending total
/// degree then descending exponents. The constant monomial is written "1";
/// the zero polynomial is a single line "0 * 1".
std::string to_text(const RationalPoly& p, const std::vector<std::string>& names);
std::string to_text(const RationalPoly& p);
std::string to_text(const LiftedPoly& p);

/// Inverse of to_text for the given variable names.
RationalPoly parse_text(std::string_view text, const std::vector<std::string>& names);

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace s2g
