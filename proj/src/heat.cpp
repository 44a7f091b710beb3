#include "s2g/heat.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace s2g {

SpectralBasis SpectralBasis::gauss(double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("gauss basis: alpha must be positive");
  SpectralBasis b;
  b.kind = Kind::gauss;
  b.alpha = alpha;
  return b;
}

SpectralBasis SpectralBasis::sphere(unsigned N, double a) {
  if (N < 1 || !(a > 0)) throw std::invalid_argument("sphere basis: needs N >= 1 and a > 0");
  SpectralBasis b;
  b.kind = Kind::sphere;
  b.N = N;
  b.a = a;
  return b;
}

double SpectralBasis::eigenvalue(unsigned k) const {
  if (kind == Kind::gauss) return k / (alpha * alpha);
  return static_cast<double>(k) * (k + N - 1.0) / (a * a);
}

SpectralCoefficients heat_evolve(const SpectralCoefficients& c, double t) {
  if (!(t >= 0)) throw std::invalid_argument("heat_evolve: t must be >= 0");
  SpectralCoefficients out{c.n, {}, c.basis};
  for (const auto& [K, v] : c.entries) {
    const double e = v * std::exp(-t * c.basis.eigenvalue(K.order()));
    if (std::abs(e) >= kUnderflowPrune) out.entries.emplace(K, e);
  }
  return out;
}

double l2_norm(const SpectralCoefficients& c) {
  double s = 0.0;
  for (const auto& [K, v] : c.entries) s += v * v;
  return std::sqrt(s);
}

double energy(const SpectralCoefficients& c) {
  double s = 0.0;
  for (const auto& [K, v] : c.entries) s += c.basis.eigenvalue(K.order()) * v * v;
  return s;
}

namespace {

double default_radius(double alpha, unsigned N) {
  if (N < 2) throw std::invalid_argument("sphere schedule: N must be >= 2");
  return alpha * std::sqrt(N - 1.0);
}

void require_gauss(const SpectralCoefficients& f) {
  if (f.basis.kind != SpectralBasis::Kind::gauss) {
    throw std::invalid_argument("expected coefficients in the Gaussian basis");
  }
}

}  // namespace

SpectralCoefficients recovery_sequence(const SpectralCoefficients& f, unsigned N) {
  require_gauss(f);
  const double alpha = f.basis.alpha;
  const double a = default_radius(alpha, N);
  SpectralCoefficients out{f.n, {}, SpectralBasis::sphere(N, a)};
  for (const auto& [K, v] : f.entries) {
    const double ratio = a * a / ((K.order() + N - 1.0) * alpha * alpha);
    out.entries.emplace(K, v * std::sqrt(ratio));
  }
  return out;
}

std::vector<HeatRow> heat_convergence_table(const SpectralCoefficients& f, double t,
                                            const std::vector<unsigned>& N_list) {
  require_gauss(f);
  const SpectralCoefficients limit = heat_evolve(f, t);
  std::vector<HeatRow> rows;
  for (unsigned N : N_list) {
    SpectralCoefficients on_sphere = f;
    on_sphere.basis = SpectralBasis::sphere(N, default_radius(f.basis.alpha, N));
    const SpectralCoefficients evolved = heat_evolve(on_sphere, t);
    double d2 = 0.0;
    for (const auto& [K, v] : f.entries) {
      auto get = [&K](const SpectralCoefficients& c) {
        auto it = c.entries.find(K);
        return it == c.entries.end() ? 0.0 : it->second;
      };
      const double diff = get(evolved) - get(limit);
      d2 += diff * diff;
    }
    rows.push_back({N, std::sqrt(d2), energy(evolved), energy(limit)});
  }
  return rows;
}

std::vector<CheegerRow> cheeger_table(const SpectralCoefficients& f, const std::vector<unsigned>& N_list) {
  require_gauss(f);
  const double e_gauss = energy(f);
  std::vector<CheegerRow> rows;
  for (unsigned N : N_list) {
    const SpectralCoefficients rec = recovery_sequence(f, N);
    SpectralCoefficients fixed = f;
    fixed.basis = rec.basis;
    double defect = 0.0;
    for (const auto& [K, v] : f.entries) {
      defect += v * v * std::abs(rec.basis.eigenvalue(K.order()) - f.basis.eigenvalue(K.order()));
    }
    const double e_rec = energy(rec);
    const double rel = e_gauss == 0.0 ? std::abs(e_rec) : std::abs(e_rec - e_gauss) / e_gauss;
    rows.push_back({N, e_rec, e_gauss, rel, l2_norm(rec), l2_norm(f), energy(fixed), defect});
  }
  return rows;
}

SpectralCoefficients parse_coefficients(std::istream& in, double alpha) {
  SpectralCoefficients out{0, {}, SpectralBasis::gauss(alpha)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("coefficients line " + std::to_string(lineno) + ": " + why);
    };
    if (fields.size() < 2) fail("expected \"K_1 ... K_n value\"");
    const unsigned n = static_cast<unsigned>(fields.size() - 1);
    if (out.n == 0) out.n = n;
    if (n != out.n) fail("inconsistent number of indices");
    std::vector<unsigned> K(n);
    for (unsigned i = 0; i < n; ++i) {
      std::size_t used = 0;
      long v = -1;
      try {
        v = std::stol(fields[i], &used);
      } catch (const std::exception&) {
        fail("bad index '" + fields[i] + "'");
      }
      if (used != fields[i].size() || v < 0) fail("bad index '" + fields[i] + "'");
      K[i] = static_cast<unsigned>(v);
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(fields.back(), &used);
      if (used != fields.back().size()) fail("bad value '" + fields.back() + "'");
    } catch (const std::invalid_argument&) {
      fail("bad value '" + fields.back() + "'");
    }
    out.entries[MultiIndex(K)] += value;
  }
  if (out.n == 0) throw std::invalid_argument("coefficients: no entries");
  return out;
}

}  // namespace s2g
