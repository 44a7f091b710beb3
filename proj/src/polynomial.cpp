#include "s2g/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace s2g {

RationalPoly::RationalPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw std::invalid_argument("RationalPoly: nvars must be >= 1");
}

RationalPoly RationalPoly::constant(std::size_t nvars, const mpq_class& c) {
  RationalPoly p(nvars);
  p.add_term(MultiIndex::zeros(nvars), c);
  return p;
}

RationalPoly RationalPoly::variable(std::size_t nvars, std::size_t i) {
  RationalPoly p(nvars);
  p.add_term(MultiIndex::unit(nvars, i), 1);
  return p;
}

RationalPoly RationalPoly::monomial(const MultiIndex& exponents, const mpq_class& c) {
  RationalPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

unsigned RationalPoly::degree() const {
  unsigned d = 0;
  for (const auto& [exps, c] : terms_) d = std::max(d, exps.order());
  return d;
}

mpq_class RationalPoly::coefficient(const MultiIndex& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void RationalPoly::add_term(const MultiIndex& exponents, const mpq_class& c) {
  if (exponents.size() != nvars_) throw std::invalid_argument("RationalPoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void RationalPoly::require_same_arity(const RationalPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("RationalPoly: variable count mismatch");
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  require_same_arity(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  require_same_arity(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& other) {
  require_same_arity(other);
  RationalPoly out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= c;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out(*this);
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

RationalPoly pow(const RationalPoly& p, unsigned e) {
  RationalPoly result = RationalPoly::constant(p.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

RationalPoly derivative(const RationalPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("derivative: variable out of range");
  RationalPoly out(p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    const unsigned e = exps[var];
    if (e == 0) continue;
    MultiIndex d = exps;
    d[var] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

RationalPoly laplacian(const RationalPoly& p, std::size_t first_vars) {
  if (first_vars > p.nvars()) throw std::out_of_range("laplacian: too many variables");
  RationalPoly out(p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    for (std::size_t i = 0; i < first_vars; ++i) {
      const unsigned e = exps[i];
      if (e < 2) continue;
      MultiIndex d = exps;
      d[i] = e - 2;
      out.add_term(d, c * (e * (e - 1)));
    }
  }
  return out;
}

RationalPoly laplacian(const RationalPoly& p) { return laplacian(p, p.nvars()); }

RationalPoly laplacian_power(const RationalPoly& p, unsigned j, std::size_t first_vars) {
  RationalPoly out = p;
  for (unsigned i = 0; i < j && !out.is_zero(); ++i) out = laplacian(out, first_vars);
  return out;
}

RationalPoly euler_pairing(const RationalPoly& p, std::size_t first_vars) {
  if (first_vars > p.nvars()) throw std::out_of_range("euler_pairing: too many variables");
  RationalPoly out(p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    unsigned weight = 0;
    for (std::size_t i = 0; i < first_vars; ++i) weight += exps[i];
    out.add_term(exps, c * weight);
  }
  return out;
}

RationalPoly euler_pairing(const RationalPoly& p) { return euler_pairing(p, p.nvars()); }

RationalPoly substitute(const RationalPoly& p, std::size_t var, const RationalPoly& value) {
  if (var >= p.nvars()) throw std::out_of_range("substitute: variable out of range");
  if (value.nvars() != p.nvars()) throw std::invalid_argument("substitute: variable count mismatch");
  std::vector<RationalPoly> powers{RationalPoly::constant(p.nvars(), 1)};
  RationalPoly out(p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    const unsigned e = exps[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    MultiIndex rest = exps;
    rest[var] = 0;
    out += RationalPoly::monomial(rest, c) * powers[e];
  }
  return out;
}

RationalPoly squared_norm(std::size_t nvars, std::size_t first_vars) {
  RationalPoly out(nvars);
  for (std::size_t i = 0; i < first_vars; ++i) {
    MultiIndex e = MultiIndex::zeros(nvars);
    e[i] = 2;
    out.add_term(e, 1);
  }
  return out;
}

RationalPoly extend_vars(const RationalPoly& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw std::invalid_argument("extend_vars: cannot drop variables");
  RationalPoly out(nvars);
  for (const auto& [exps, c] : p.terms()) {
    std::vector<unsigned> e = exps.entries();
    e.resize(nvars, 0u);
    out.add_term(MultiIndex(std::move(e)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------

NumericPoly::NumericPoly(const RationalPoly& p) : nvars_(p.nvars()) {
  coeffs_.reserve(p.terms().size());
  exponents_.reserve(p.terms().size() * nvars_);
  for (const auto& [exps, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    exponents_.insert(exponents_.end(), exps.entries().begin(), exps.entries().end());
  }
}

double NumericPoly::operator()(std::span<const double> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("NumericPoly: dimension mismatch");
  double sum = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    double term = coeffs_[t];
    const unsigned* e = exponents_.data() + t * nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= detail::int_power(x[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------

LiftedPoly::LiftedPoly(RationalPoly base, unsigned n, unsigned N) : base_(std::move(base)), n_(n), N_(N) {
  if (n == 0) throw std::invalid_argument("LiftedPoly: n must be >= 1");
  if (N < n) throw std::invalid_argument("LiftedPoly: requires n <= N");
  if (base_.nvars() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("LiftedPoly: base polynomial must have n+1 variables");
  }
}

LiftedPoly LiftedPoly::from_horizontal(const RationalPoly& q, unsigned N) {
  const auto n = static_cast<unsigned>(q.nvars());
  return LiftedPoly(extend_vars(q, n + 1), n, N);
}

LiftedPoly LiftedPoly::t_slot(unsigned n, unsigned N) {
  return LiftedPoly(RationalPoly::variable(n + 1, n), n, N);
}

long LiftedPoly::weighted_degree() const {
  long d = -1;
  for (const auto& [exps, c] : base_.terms()) {
    long w = 0;
    for (std::size_t i = 0; i < n_; ++i) w += exps[i];
    w += 2L * exps[n_];
    if (d < 0) {
      d = w;
    } else if (w != d) {
      return -1;
    }
  }
  return d;
}

LiftedPoly lifted_laplacian(const LiftedPoly& p) {
  const std::size_t t = p.t_index();
  RationalPoly out = laplacian(p.base(), p.n());
  const long m = static_cast<long>(p.N()) - static_cast<long>(p.n());
  for (const auto& [exps, c] : p.base().terms()) {
    const unsigned j = exps[t];
    if (j == 0) continue;
    MultiIndex d = exps;
    d[t] = j - 1;
    const long factor = 2L * j * (m + 2L * j - 1);
    out.add_term(d, c * factor);
  }
  return LiftedPoly(std::move(out), p.n(), p.N());
}

RationalPoly restrict_to_sphere(const LiftedPoly& p, const mpq_class& a2) {
  const std::size_t nv = p.base().nvars();
  RationalPoly t_value = RationalPoly::constant(nv, a2) - squared_norm(nv, p.n());
  RationalPoly sub = substitute(p.base(), p.t_index(), t_value);
  // drop the (now absent) t variable
  RationalPoly out(p.n());
  for (const auto& [exps, c] : sub.terms()) {
    std::vector<unsigned> e(exps.entries().begin(), exps.entries().begin() + p.n());
    out.add_term(MultiIndex(std::move(e)), c);
  }
  return out;
}

std::size_t exact_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

std::vector<std::string> default_variable_names(std::size_t nvars, bool lifted) {
  std::vector<std::string> names;
  const std::size_t nx = lifted ? nvars - 1 : nvars;
  for (std::size_t i = 0; i < nx; ++i) names.push_back("x" + std::to_string(i + 1));
  if (lifted) names.emplace_back("t");
  return names;
}

namespace {

bool text_order(const MultiIndex& a, const MultiIndex& b) {
  if (a.order() != b.order()) return a.order() > b.order();
  return a > b;
}

}  // namespace

std::string to_text(const RationalPoly& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) throw std::invalid_argument("to_text: wrong number of names");
  if (p.is_zero()) return "0 * 1\n";
  std::vector<const RationalPoly::Terms::value_type*> sorted;
  for (const auto& term : p.terms()) sorted.push_back(&term);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return text_order(a->first, b->first); });
  std::ostringstream os;
  for (const auto* term : sorted) {
    os << term->second.get_str() << " *";
    bool any = false;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (term->first[i] == 0) continue;
      os << ' ' << names[i] << '^' << term->first[i];
      any = true;
    }
    if (!any) os << " 1";
    os << '\n';
  }
  return os.str();
}

std::string to_text(const RationalPoly& p) { return to_text(p, default_variable_names(p.nvars())); }

std::string to_text(const LiftedPoly& p) {
  return to_text(p.base(), default_variable_names(p.base().nvars(), true));
}

RationalPoly parse_text(std::string_view text, const std::vector<std::string>& names) {
  RationalPoly out(names.size());
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string coeff_str, star;
    ls >> coeff_str >> star;
    if (star != "*") throw std::invalid_argument("parse_text: expected '*' in line: " + line);
    mpq_class coeff;
    if (coeff.set_str(coeff_str, 10) != 0) {
      throw std::invalid_argument("parse_text: bad coefficient '" + coeff_str + "'");
    }
    coeff.canonicalize();
    MultiIndex exps = MultiIndex::zeros(names.size());
    std::string factor;
    while (ls >> factor) {
      if (factor == "1") continue;
      const auto caret = factor.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("parse_text: bad factor '" + factor + "'");
      const std::string name = factor.substr(0, caret);
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw std::invalid_argument("parse_text: unknown variable '" + name + "'");
      exps[static_cast<std::size_t>(it - names.begin())] += static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
    }
    out.add_term(exps, coeff);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << to_text(p); }

}  // namespace s2g
