#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "s2g/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"sphere2gauss"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = s2g::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string tmp(const std::string& name) { return std::string(S2G_TEST_TMPDIR) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("converge-closed reports exact rational errors") {
  const Run r = run({"converge-closed", "--n", "2", "--alpha", "1", "--kmax", "3", "--N", "101"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() >= 5);
  CHECK(l[0].rfind("N,k,a2,lhs,rhs,abs_err", 0) == 0);
  CHECK(r.out.find("101,2,100,") != std::string::npos);
  CHECK(l[3].find(",1/25,") != std::string::npos);
}

TEST_CASE("closed-spectrum in JSON") {
  const Run r = run({"closed-spectrum", "--n", "1", "--alpha2", "2", "--kmax", "2", "--N", "3,5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_object());
  CHECK(r.out.find("lambda_gauss") != std::string::npos);
}

TEST_CASE("cap-eigen and halfspace-eigen") {
  const Run cap = run({"cap-eigen", "--N", "7", "--a", "1", "--theta", "1.5707963267948966"});
  REQUIRE(cap.code == 0);
  const auto l = lines(cap.out);
  REQUIRE(l.size() == 2);
  CHECK(l[1].rfind("7,1.0000000000000000e+00,", 0) == 0);
  CHECK(l[1].find(",ok") != std::string::npos);

  const Run half = run({"halfspace-eigen", "--alpha", "1", "--R", "0", "--j", "2"});
  REQUIRE(half.code == 0);
  CHECK(half.out.find(",2,3.0000000000") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const Run r = run({"cap-eigen", "--N", "7", "--a", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error:", 0) == 0);
  CHECK(run({"cap-eigen", "--N", "7", "--a", "1", "--theta", "4"}).code == 2);
  CHECK(run({"closed-spectrum", "--n", "1", "--alpha", "abc", "--N", "3"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"converge-dirichlet", "--alpha", "1", "--R", "0", "--compare", "--schedule", "x.csv"}).code == 2);
  CHECK(run({"--format", "xml", "nu", "--s", "0.5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("computational failures exit 1 with an error record") {
  const Run r = run({"cap-eigen", "--N", "7", "--a", "1", "--theta", "1.2", "--tol", "1e-300"});
  CHECK(r.code == 1);
  CHECK(r.out.find("error: residual") != std::string::npos);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("converge-dirichlet is deterministic") {
  const Run a = run({"converge-dirichlet", "--alpha", "1", "--R", "0.5", "--N", "25,50"});
  const Run b = run({"converge-dirichlet", "--alpha", "1", "--R", "0.5", "--N", "25,50", "--jobs", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out).size() == 3);
}

TEST_CASE("schedule import") {
  const std::string path = tmp("schedule.csv");
  write_file(path, "N,a_N,theta_N\n10,3,1.5707963267948966\n20,4.358898943540674,1.5707963267948966\n");
  const Run r = run({"converge-dirichlet", "--alpha", "1", "--R", "0", "--schedule", path.c_str()});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[1].rfind("10,3.0000000000000000e+00,", 0) == 0);
  write_file(path, "N,a\n10,3\n");
  CHECK(run({"converge-dirichlet", "--alpha", "1", "--R", "0", "--schedule", path.c_str()}).code == 2);
}

TEST_CASE("plot data and output files") {
  const std::string plot = tmp("plot.csv"), table = tmp("table.csv");
  const Run r = run({"--emit-plot-data", plot.c_str(), "-o", table.c_str(), "converge-dirichlet", "--alpha", "1",
                     "--R", "0", "--N", "25,50"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream p(plot), t(table);
  std::string header;
  std::getline(p, header);
  CHECK(header == "x,y");
  int n = 0;
  for (std::string l; std::getline(p, l);) ++n;
  CHECK(n == 2);
  std::getline(t, header);
  CHECK(header.rfind("N,a_N,theta_N", 0) == 0);
}

TEST_CASE("seed from the environment") {
  ::setenv("SPHERE2GAUSS_SEED", "junk", 1);
  CHECK(run({"verify", "--suite", "dimension"}).code == 2);
  ::setenv("SPHERE2GAUSS_SEED", "7", 1);
  const Run a = run({"verify", "--suite", "dimension"});
  ::unsetenv("SPHERE2GAUSS_SEED");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("PASS dimension", 0) == 0);
}

TEST_CASE("heat and cheeger read coefficient files") {
  const std::string path = tmp("coeffs.txt");
  write_file(path, "# K value\n1 0 1\n2 1 0.5\n");
  const Run h = run({"heat", "--t", "1", "--N", "100,1000", "--coeffs", path.c_str()});
  REQUIRE(h.code == 0);
  CHECK(lines(h.out).size() == 3);
  const Run c = run({"cheeger", "--alpha", "1", "--N", "10", "--coeffs", path.c_str()});
  REQUIRE(c.code == 0);
  CHECK(lines(c.out)[0].rfind("N,energy_recovery", 0) == 0);
  CHECK(run({"heat", "--t", "1", "--N", "10", "--coeffs", tmp("missing.txt").c_str()}).code == 2);
}

TEST_CASE("dump-poly") {
  const Run r = run({"dump-poly", "--family", "hermite", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1 * x1^2\n-1 * 1\n");
}
