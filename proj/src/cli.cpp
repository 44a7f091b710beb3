#include "s2g/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "s2g/convergence.hpp"
#include "s2g/eigensolve.hpp"
#include "s2g/harmonics.hpp"
#include "s2g/heat.hpp"
#include "s2g/parallel.hpp"
#include "s2g/polynomial.hpp"
#include "s2g/table.hpp"
#include "s2g/verify.hpp"

namespace s2g::cli {

namespace {

struct Globals {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 42;
  unsigned jobs = 0;
  unsigned quad_order = 48;
  unsigned panels = 64;
  std::string plot_path;
};

/// What a subcommand hands back: a table or plain text, optional (x, y) plot
/// pairs, and the messages that make the run a computational failure.
struct Output {
  std::unique_ptr<Table> table;
  std::string text;
  std::vector<std::pair<double, double>> plot;
  std::vector<std::string> failures;
};

std::string rational_text(const mpq_class& q) { return q.get_str(); }

mpq_class alpha_squared(const std::string& alpha, const std::string& alpha2) {
  mpq_class a2;
  if (!alpha2.empty()) {
    a2 = parse_rational(alpha2);
  } else {
    const mpq_class a = parse_rational(alpha);
    if (a <= 0) throw std::invalid_argument("--alpha must be positive");
    a2 = a * a;
  }
  if (a2 <= 0) throw std::invalid_argument("--alpha2 must be positive");
  return a2;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ls(line);
  while (std::getline(ls, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

/// CSV with a header naming N, a_N and theta_N (any order, extra columns ignored).
std::vector<ScheduleEntry> read_schedule(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  std::map<std::string, std::size_t> col;
  std::vector<ScheduleEntry> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (col.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) col[fields[i]] = i;
      for (const char* name : {"N", "a_N", "theta_N"}) {
        if (!col.count(name)) throw std::invalid_argument(path + ": header lacks column " + name);
      }
      continue;
    }
    auto get = [&](const char* name) {
      const std::size_t i = col.at(name);
      if (i >= fields.size()) {
        throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": missing " + name);
      }
      return fields[i];
    };
    try {
      const long N = std::stol(get("N"));
      const double a = std::stod(get("a_N"));
      const double theta = std::stod(get("theta_N"));
      if (N < 2 || !(a > 0) || !(theta > 0) || !(theta < M_PI)) throw std::out_of_range("range");
      out.push_back({static_cast<unsigned>(N), a, theta});
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": bad schedule row");
    }
  }
  if (out.empty()) throw std::invalid_argument(path + ": empty schedule");
  return out;
}

MultiIndex parse_K(const std::string& text) {
  std::vector<unsigned> K;
  for (const std::string& f : split_csv_line(text)) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(f, &used);
    } catch (const std::exception&) {
    }
    if (used != f.size() || v < 0) throw std::invalid_argument("bad multi-index '" + text + "'");
    K.push_back(static_cast<unsigned>(v));
  }
  return MultiIndex(K);
}

// --- subcommands -----------------------------------------------------------

struct ClosedArgs {
  unsigned n = 1;
  std::string alpha = "1";
  std::string alpha2;
  unsigned kmax = 4;
  std::vector<unsigned> N;
};

void add_closed_options(CLI::App* sub, ClosedArgs& a) {
  sub->add_option("--n", a.n, "projected dimension")->capture_default_str();
  sub->add_option("--alpha", a.alpha, "Gaussian scale, exact decimal or p/q")->capture_default_str();
  sub->add_option("--alpha2", a.alpha2, "alpha^2 directly (overrides --alpha)");
  sub->add_option("--kmax", a.kmax, "largest degree k")->capture_default_str();
  sub->add_option("--N", a.N, "sphere dimensions")->required()->delimiter(',');
}

Output closed_spectrum(const ClosedArgs& a, const Globals&) {
  const mpq_class alpha2 = alpha_squared(a.alpha, a.alpha2);
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{
      "N", "k", "a2", "lambda_sphere", "mult_sphere", "dim_projected", "lambda_gauss"});
  o.table->add_meta("n", std::int64_t{a.n});
  o.table->add_meta("alpha2", rational_text(alpha2));
  for (const ClosedRow& r : closed_spectrum_table(a.n, alpha2, a.kmax, a.N)) {
    o.table->add_row({std::int64_t{r.N}, std::int64_t{r.k}, rational_text(r.a2), rational_text(r.lhs),
                      r.mult_sphere.get_str(), r.dim_projected.get_str(), rational_text(r.rhs)});
  }
  return o;
}

Output converge_closed(const ClosedArgs& a, const Globals&) {
  const mpq_class alpha2 = alpha_squared(a.alpha, a.alpha2);
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{
      "N", "k", "a2", "lhs", "rhs", "abs_err", "abs_err_float", "dim_projected"});
  o.table->add_meta("n", std::int64_t{a.n});
  o.table->add_meta("alpha2", rational_text(alpha2));
  for (const ClosedRow& r : closed_spectrum_table(a.n, alpha2, a.kmax, a.N)) {
    o.table->add_row({std::int64_t{r.N}, std::int64_t{r.k}, rational_text(r.a2), rational_text(r.lhs),
                      rational_text(r.rhs), rational_text(r.abs_err), r.abs_err.get_d(),
                      r.dim_projected.get_str()});
    if (r.k > 0) o.plot.emplace_back(r.N, r.abs_err.get_d());
  }
  return o;
}

std::string residual_refusal(double residual, double tol) {
  return "residual " + format_double(residual) + " exceeds tolerance " + format_double(tol);
}

void keep_samples(const EigenResult& res, Output& o) {
  o.plot.assign(res.samples.begin(), res.samples.end());
}

struct CapArgs {
  unsigned N = 2;
  double a = 1.0;
  double theta = 0.0;
  unsigned k = 0;
  unsigned j = 1;
  double tol = 1e-8;
};

Output cap_eigen(const CapArgs& a, const Globals&) {
  const CapProblem p{a.N, a.a, a.theta, a.k, a.j};
  validate(p);
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{
      "N", "a", "theta", "k", "j", "lambda", "residual", "zeros", "status"});
  std::vector<Cell> row{std::int64_t{a.N}, a.a, a.theta, std::int64_t{a.k}, std::int64_t{a.j}};
  try {
    const EigenResult res = cap_eigenvalue(p, a.tol);
    if (res.residual <= a.tol) {
      row.insert(row.end(), {res.lambda, res.residual, std::int64_t{res.zeros}, std::string("ok")});
      keep_samples(res, o);
    } else {
      o.failures.push_back(residual_refusal(res.residual, a.tol));
      row.insert(row.end(), {std::string(), res.residual, std::string(), "error: " + o.failures.back()});
    }
  } catch (const SolverError& e) {
    o.failures.push_back(e.what());
    row.insert(row.end(), {std::string(), std::string(), std::string(), "error: " + o.failures.back()});
  }
  o.table->add_row(std::move(row));
  return o;
}

struct HalfArgs {
  double alpha = 1.0;
  double R = 0.0;
  unsigned k = 0;
  unsigned j = 1;
  double tol = 1e-8;
  double cutoff = 14.0;
};

Output halfspace_eigen(const HalfArgs& a, const Globals&) {
  const HalflineProblem p{a.alpha, a.R, a.k, a.j, a.cutoff};
  validate(p);
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{
      "alpha", "R", "k", "j", "lambda", "residual", "zeros", "truncation", "status"});
  std::vector<Cell> row{a.alpha, a.R, std::int64_t{a.k}, std::int64_t{a.j}};
  const double L = a.alpha * (a.R + a.cutoff);
  try {
    const EigenResult res = halfline_eigenvalue(p, a.tol);
    if (res.residual <= a.tol) {
      row.insert(row.end(), {res.lambda, res.residual, std::int64_t{res.zeros}, L, std::string("ok")});
      keep_samples(res, o);
    } else {
      o.failures.push_back(residual_refusal(res.residual, a.tol));
      row.insert(row.end(), {std::string(), res.residual, std::string(), L, "error: " + o.failures.back()});
    }
  } catch (const SolverError& e) {
    o.failures.push_back(e.what());
    row.insert(row.end(), {std::string(), std::string(), std::string(), L, "error: " + o.failures.back()});
  }
  o.table->add_row(std::move(row));
  return o;
}

struct DirichletArgs {
  double alpha = 1.0;
  double R = 0.0;
  std::vector<unsigned> N{25, 50, 100, 200, 400};
  double tol = 1e-8;
  std::string schedule;
  double A_bound = 10.0;
  double cutoff = 14.0;
  bool compare = false;
};

Output converge_dirichlet(const DirichletArgs& a, const Globals& g) {
  if (!a.schedule.empty() && a.compare) {
    throw std::invalid_argument("--compare uses the default schedule and cannot be combined with --schedule");
  }
  std::vector<std::string> skipped;
  const std::vector<ScheduleEntry> schedule =
      a.schedule.empty() ? default_schedule(a.alpha, a.R, a.N, &skipped) : read_schedule(a.schedule);
  Output o;
  std::vector<std::string> cols{"N",        "a_N",          "theta_N",      "lhs",     "rhs",
                                "abs_err",  "residual_lhs", "residual_rhs", "hyp_cos", "hyp_A",
                                "hyp_ok",   "A_N",          "status"};
  if (a.compare) cols.insert(cols.end(), {"l2_distance", "h1_surrogate", "gauss_mass"});
  o.table = std::make_unique<Table>(cols);
  o.table->add_meta("alpha", a.alpha);
  o.table->add_meta("R", a.R);
  o.table->add_meta("tol", a.tol);
  o.table->add_meta("A_bound", a.A_bound);
  for (const auto& s : skipped) o.table->add_meta("skipped", s);
  if (schedule.empty()) throw std::invalid_argument("no admissible N: every a_N <= |alpha R|");

  DirichletOptions opt;
  opt.tol = a.tol;
  opt.A_bound = a.A_bound;
  opt.cutoff = a.cutoff;
  opt.jobs = g.jobs;
  std::vector<DirichletRow> rows;
  try {
    rows = dirichlet_convergence_table(a.alpha, a.R, schedule, opt);
  } catch (const SolverError& e) {
    // the shared half-line value failed; every row inherits the failure
    for (const auto& s : schedule) {
      DirichletRow r;
      r.entry = s;
      r.status = std::string("error: ") + e.what();
      rows.push_back(r);
    }
  }
  std::vector<EigenfunctionComparison> cmp;
  std::vector<std::string> cmp_error(rows.size());
  if (a.compare) {
    cmp = parallel_map<EigenfunctionComparison>(rows.size(), g.jobs, [&](std::size_t i) {
      if (!rows[i].ok()) return EigenfunctionComparison{};
      try {
        return eigenfunction_comparison(a.alpha, a.R, rows[i].entry.N, a.tol, g.quad_order, g.panels);
      } catch (const std::runtime_error& e) {
        cmp_error[i] = e.what();
        return EigenfunctionComparison{};
      }
    });
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const DirichletRow& r = rows[i];
    std::vector<Cell> row{std::int64_t{r.entry.N}, r.entry.a, r.entry.theta};
    if (r.ok()) {
      row.insert(row.end(), {r.lhs, r.rhs, r.abs_err, r.residual_lhs, r.residual_rhs});
      o.plot.emplace_back(r.entry.N, r.abs_err);
    } else {
      o.failures.push_back("N=" + std::to_string(r.entry.N) + ": " + r.status.substr(r.status.find(' ') + 1));
      row.insert(row.end(), {std::string(), std::string(), std::string(), std::string(), std::string()});
    }
    row.insert(row.end(), {r.hyp_cos, r.hyp_A, r.hyp_cos && r.hyp_A, r.A, r.status});
    if (a.compare) {
      if (r.ok() && cmp_error[i].empty()) {
        row.insert(row.end(), {cmp[i].l2_distance, cmp[i].h1_surrogate, cmp[i].gauss_mass});
      } else {
        if (!cmp_error[i].empty()) o.failures.push_back("N=" + std::to_string(r.entry.N) + ": " + cmp_error[i]);
        row.insert(row.end(), {std::string(), std::string(), std::string()});
      }
    }
    o.table->add_row(std::move(row));
  }
  return o;
}

struct NuArgs {
  double s = 0.5;
  unsigned N_from = 2;
  unsigned N_to = 30;
  double tol = 1e-8;
};

Output nu(const NuArgs& a, const Globals& g) {
  if (!(a.s > 0 && a.s < 1)) throw std::invalid_argument("--s must lie in (0, 1)");
  if (a.N_from < 2 || a.N_to < a.N_from) throw std::invalid_argument("need 2 <= --N-from <= --N-to");
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{"N", "s", "theta", "lambda", "nu", "residual", "status"});
  const std::size_t count = a.N_to - a.N_from + 1;
  struct Item {
    double theta = 0.0;
    EigenResult res;
    std::string error;
  };
  const auto items = parallel_map<Item>(count, g.jobs, [&](std::size_t i) {
    Item it;
    const unsigned N = a.N_from + static_cast<unsigned>(i);
    it.theta = cap_angle_for_fraction(N, a.s);
    try {
      it.res = cap_eigenvalue(CapProblem{N, 1.0, it.theta, 0, 1}, a.tol);
    } catch (const SolverError& e) {
      it.error = e.what();
    }
    return it;
  });
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned N = a.N_from + static_cast<unsigned>(i);
    const Item& it = items[i];
    std::vector<Cell> row{std::int64_t{N}, a.s, it.theta};
    std::string why = it.error;
    if (why.empty() && it.res.residual > a.tol) why = residual_refusal(it.res.residual, a.tol);
    if (why.empty()) {
      const double m = N - 1.0;
      const double v = 0.5 * (-m + std::sqrt(m * m + 4.0 * it.res.lambda));
      row.insert(row.end(), {it.res.lambda, v, it.res.residual, std::string("ok")});
      o.plot.emplace_back(N, v);
    } else {
      o.failures.push_back("N=" + std::to_string(N) + ": " + why);
      row.insert(row.end(), {std::string(), std::string(), std::string(), "error: " + why});
    }
    o.table->add_row(std::move(row));
  }
  return o;
}

struct HeatArgs {
  double alpha = 1.0;
  double t = 0.0;
  std::vector<unsigned> N;
  std::string coeffs;
};

SpectralCoefficients load_coefficients(const HeatArgs& a) {
  if (!(a.alpha > 0)) throw std::invalid_argument("--alpha must be positive");
  std::ifstream in = open_input(a.coeffs);
  return parse_coefficients(in, a.alpha);
}

Output heat(const HeatArgs& a, const Globals&) {
  const SpectralCoefficients f = load_coefficients(a);
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{"N", "l2_distance", "energy_sphere", "energy_gauss"});
  o.table->add_meta("alpha", a.alpha);
  o.table->add_meta("t", a.t);
  o.table->add_meta("l2_norm_f", l2_norm(f));
  for (const HeatRow& r : heat_convergence_table(f, a.t, a.N)) {
    o.table->add_row({std::int64_t{r.N}, r.l2_distance, r.energy_sphere, r.energy_gauss});
    o.plot.emplace_back(r.N, r.l2_distance);
  }
  return o;
}

Output cheeger(const HeatArgs& a, const Globals&) {
  const SpectralCoefficients f = load_coefficients(a);
  Output o;
  o.table = std::make_unique<Table>(std::vector<std::string>{
      "N", "energy_recovery", "energy_gauss", "rel_err", "l2_recovery", "l2_gauss", "energy_fixed", "defect"});
  o.table->add_meta("alpha", a.alpha);
  for (const CheegerRow& r : cheeger_table(f, a.N)) {
    o.table->add_row({std::int64_t{r.N}, r.energy_recovery, r.energy_gauss, r.rel_err, r.l2_recovery,
                      r.l2_gauss, r.energy_fixed, r.defect});
    o.plot.emplace_back(r.N, r.energy_fixed - r.energy_gauss);
  }
  return o;
}

struct VerifyArgs {
  std::string suite = "all";
};

Output verify(const VerifyArgs& a, const Globals& g) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.jobs = g.jobs;
  opt.quad_order = g.quad_order;
  std::vector<std::string> names = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
  Output o;
  std::vector<SuiteResult> results;
  for (const auto& name : names) results.push_back(run_suite(name, opt));
  if (g.format == "json") {
    o.table = std::make_unique<Table>(std::vector<std::string>{"suite", "pass", "summary", "detail"});
    o.table->add_meta("seed", std::to_string(g.seed));
    for (std::size_t i = 0; i < names.size(); ++i) {
      o.table->add_row({names[i], results[i].pass, results[i].summary, results[i].detail});
    }
  } else {
    for (const auto& r : results) o.text += r.summary + '\n';
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!results[i].pass) o.failures.push_back(names[i] + ": " + results[i].detail);
  }
  return o;
}

struct DumpArgs {
  std::string family = "P";
  unsigned N = 2;
  std::string K;
  std::string a2;
  std::string alpha2 = "1";
  unsigned k = 0;
};

Output dump_poly(const DumpArgs& a, const Globals&) {
  Output o;
  auto need_K = [&] {
    if (a.K.empty()) throw std::invalid_argument("--K is required for family " + a.family);
    return parse_K(a.K);
  };
  const mpq_class a2 = a.a2.empty() ? mpq_class(a.N) : parse_rational(a.a2);
  if (a.family == "P") {
    o.text = to_text(build_P(a.N, need_K()));
  } else if (a.family == "Q_sphere") {
    o.text = to_text(build_Q_sphere(a.N, need_K(), a2));
  } else if (a.family == "Q_gauss") {
    o.text = to_text(build_Q_gauss(need_K(), parse_rational(a.alpha2)));
  } else if (a.family == "R") {
    o.text = to_text(build_R(a.N, need_K(), a2));
  } else if (a.family == "hermite") {
    o.text = to_text(hermite(a.k));
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }
  if (!o.text.empty() && o.text.back() != '\n') o.text += '\n';
  return o;
}

void write_plot(const std::string& path, const std::vector<std::pair<double, double>>& plot) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << "x,y\n";
  for (const auto& [x, y] : plot) f << format_double(x) << ',' << format_double(y) << '\n';
}

void emit(const Output& o, const Globals& g, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) throw std::invalid_argument("cannot write '" + g.output + "'");
    os = &file;
  }
  if (o.table) {
    if (g.format == "json") {
      o.table->write_json(*os);
    } else {
      o.table->write_csv(*os);
    }
  } else {
    *os << o.text;
  }
  if (!g.plot_path.empty()) write_plot(g.plot_path, o.plot);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of high-dimensional spheres projected to Gaussian space", "sphere2gauss"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message([](const CLI::App*, const CLI::Error& e) { return std::string("error: ") + e.what() + '\n'; });

  Globals g;
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output,-o", g.output, "write the table here instead of stdout");
  app.add_option("--seed", g.seed, "random seed (SPHERE2GAUSS_SEED overrides)")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--quad-order", g.quad_order, "Gauss rule order")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--panels", g.panels, "composite panels")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--emit-plot-data", g.plot_path, "write x,y pairs to this CSV file");

  std::map<CLI::App*, std::function<Output()>> handlers;

  ClosedArgs closed_spec, closed_conv;
  auto* cs = app.add_subcommand("closed-spectrum", "closed eigenvalues, multiplicities and d_k(n)");
  add_closed_options(cs, closed_spec);
  handlers[cs] = [&] { return closed_spectrum(closed_spec, g); };
  auto* cc = app.add_subcommand("converge-closed", "exact sphere vs Gauss eigenvalue errors");
  add_closed_options(cc, closed_conv);
  handlers[cc] = [&] { return converge_closed(closed_conv, g); };

  CapArgs cap;
  auto* ce = app.add_subcommand("cap-eigen", "Dirichlet eigenvalue of a spherical cap");
  ce->add_option("--N", cap.N, "sphere dimension")->required();
  ce->add_option("--a", cap.a, "radius")->required();
  ce->add_option("--theta", cap.theta, "cap half-angle")->required();
  ce->add_option("--k", cap.k, "angular degree")->capture_default_str();
  ce->add_option("--j", cap.j, "radial index, 1 = ground")->capture_default_str();
  ce->add_option("--tol", cap.tol, "eigenvalue and residual tolerance")->capture_default_str();
  handlers[ce] = [&] { return cap_eigen(cap, g); };

  HalfArgs half;
  auto* he = app.add_subcommand("halfspace-eigen", "Dirichlet eigenvalue of the half-space {x1 > alpha R}");
  he->add_option("--alpha", half.alpha, "Gaussian scale")->required();
  he->add_option("--R", half.R, "half-space offset")->required();
  he->add_option("--k", half.k, "shift k/alpha^2")->capture_default_str();
  he->add_option("--j", half.j, "radial index, 1 = ground")->capture_default_str();
  he->add_option("--tol", half.tol, "eigenvalue and residual tolerance")->capture_default_str();
  he->add_option("--cutoff", half.cutoff, "truncate at alpha (R + cutoff)")->capture_default_str();
  handlers[he] = [&] { return halfspace_eigen(half, g); };

  DirichletArgs dir;
  auto* cd = app.add_subcommand("converge-dirichlet", "cap eigenvalues against the half-space limit");
  cd->add_option("--alpha", dir.alpha, "Gaussian scale")->required();
  cd->add_option("--R", dir.R, "half-space offset")->required();
  cd->add_option("--N", dir.N, "sphere dimensions")->delimiter(',')->capture_default_str();
  cd->add_option("--tol", dir.tol, "eigenvalue and residual tolerance")->capture_default_str();
  cd->add_option("--schedule", dir.schedule, "CSV with columns N,a_N,theta_N");
  cd->add_option("--A-bound", dir.A_bound, "hypothesis bound on A_N")->capture_default_str();
  cd->add_option("--cutoff", dir.cutoff, "half-line truncation")->capture_default_str();
  cd->add_flag("--compare", dir.compare, "add eigenfunction distances");
  handlers[cd] = [&] { return converge_dirichlet(dir, g); };

  NuArgs nu_args;
  auto* nc = app.add_subcommand("nu", "nu(s, N) for caps of volume fraction s on S^N(1)");
  nc->add_option("--s", nu_args.s, "volume fraction")->required();
  nc->add_option("--N-from", nu_args.N_from)->capture_default_str();
  nc->add_option("--N-to", nu_args.N_to)->capture_default_str();
  nc->add_option("--tol", nu_args.tol)->capture_default_str();
  handlers[nc] = [&] { return nu(nu_args, g); };

  HeatArgs heat_args, cheeger_args;
  auto* hc = app.add_subcommand("heat", "heat flow on spheres vs Gaussian space");
  hc->add_option("--alpha", heat_args.alpha)->capture_default_str();
  hc->add_option("--t", heat_args.t, "time")->required()->check(CLI::NonNegativeNumber);
  hc->add_option("--N", heat_args.N)->required()->delimiter(',');
  hc->add_option("--coeffs", heat_args.coeffs, "lines \"K_1 ... K_n value\"")->required();
  handlers[hc] = [&] { return heat(heat_args, g); };
  auto* ch = app.add_subcommand("cheeger", "Cheeger energy recovery sequence");
  ch->add_option("--alpha", cheeger_args.alpha)->capture_default_str();
  ch->add_option("--N", cheeger_args.N)->required()->delimiter(',');
  ch->add_option("--coeffs", cheeger_args.coeffs, "lines \"K_1 ... K_n value\"")->required();
  handlers[ch] = [&] { return cheeger(cheeger_args, g); };

  VerifyArgs ver;
  auto* vc = app.add_subcommand("verify", "exact and randomized self-checks");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  vc->add_option("--suite", ver.suite)->check(CLI::IsMember(choices))->capture_default_str();
  handlers[vc] = [&] { return verify(ver, g); };

  DumpArgs dump;
  auto* dp = app.add_subcommand("dump-poly", "print a family member in text form");
  dp->add_option("--family", dump.family)
      ->check(CLI::IsMember({"P", "Q_sphere", "Q_gauss", "R", "hermite"}))
      ->capture_default_str();
  dp->add_option("--N", dump.N)->capture_default_str();
  dp->add_option("--K", dump.K, "multi-index, e.g. 2,1");
  dp->add_option("--a2", dump.a2, "a^2 (default N)");
  dp->add_option("--alpha2", dump.alpha2)->capture_default_str();
  dp->add_option("--k", dump.k, "Hermite degree")->capture_default_str();
  handlers[dp] = [&] { return dump_poly(dump, g); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("SPHERE2GAUSS_SEED")) {
    try {
      std::size_t used = 0;
      g.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      err << "error: SPHERE2GAUSS_SEED is not an unsigned integer: '" << env << "'\n";
      return 2;
    }
  }

  try {
    Output o = handlers.at(app.get_subcommands().front())();
    emit(o, g, out);
    for (const auto& f : o.failures) err << "error: " << f << '\n';
    return o.failures.empty() ? 0 : 1;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace s2g::cli
