// End-to-end checks of the command-line tool: exit codes, CSV and JSON
// shapes, and a few values strong enough to catch a miswired subcommand.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "wseries/oracle.hpp"
#include "wseries/series.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + WSERIES_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream is(line);
  std::string cell;
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  return cells;
}

double num(const std::string& cell) { return std::strtod(cell.c_str(), nullptr); }

}  // namespace

TEST_CASE("eval: csv shape and agreement with the oracle") {
  const auto r = run_cli("eval --series comtet --x 10 --N 40");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "value_re,value_im,oracle_re,oracle_im,abs_error,rel_error,residual");
  const auto row = cells_of(lines[1]);
  REQUIRE(row.size() == 7);
  const double w = wseries::lambert_w_real(0, 10.0);
  CHECK(num(row[0]) == doctest::Approx(w).epsilon(1e-10));
  CHECK(num(row[1]) == 0.0);
  CHECK(num(row[2]) == doctest::Approx(w).epsilon(1e-14));
  CHECK(num(row[4]) <= 1e-10);
  CHECK(num(row[6]) <= 1e-12);
}

TEST_CASE("eval: improved series close to its real threshold") {
  const auto r = run_cli("eval --series improved --x 1.5 --N 60");
  REQUIRE(r.code == 0);
  const auto row = cells_of(lines_of(r.out)[1]);
  CHECK(num(row[0]) == doctest::Approx(wseries::lambert_w_real(0, 1.5)).epsilon(1e-10));
  CHECK(num(row[4]) <= 1e-6);
}

TEST_CASE("eval: ln-x series at x = 1 reproduces the constant term exactly") {
  const auto r = run_cli("eval --series wright-ln --x 1 --N 20");
  REQUIRE(r.code == 0);
  const auto row = cells_of(lines_of(r.out)[1]);
  char want[40];
  std::snprintf(want, sizeof want, "%.17g", wseries::omega_constant());
  CHECK(row[0] == want);  // the 17-digit format is round-trip exact
}

TEST_CASE("eval: json document with metadata") {
  const auto r = run_cli("eval --series comtet --x 10 --N 40 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["meta"]["precision"] == "standard");
  CHECK(doc["meta"]["significand_bits"] == 53);
  CHECK(doc["meta"]["series"] == "comtet");
  CHECK(doc["meta"]["N"] == 40);
  REQUIRE(doc["columns"].size() == 7);
  REQUIRE(doc["rows"].size() == 1);
  const double w = wseries::lambert_w_real(0, 10.0);
  CHECK(doc["rows"][0][0].get<double>() == doctest::Approx(w).epsilon(1e-10));

  const auto e = run_cli("eval --series comtet --x 10 --N 40 --precision elevated --format json");
  REQUIRE(e.code == 0);
  const auto edoc = nlohmann::json::parse(e.out);
  CHECK(edoc["meta"]["precision"] == "elevated");
  CHECK(edoc["meta"]["significand_bits"].get<long>() > 53);
  CHECK(edoc["rows"][0][4].get<double>() <= 1e-10);
}

TEST_CASE("eval: complex argument with a shift") {
  const auto r =
      run_cli("eval --series improved --z-re -5 --z-im 2 --p-re 0.3 --N 40 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"][0][3].get<double>() != 0.0);  // oracle_im
  CHECK(doc["rows"][0][4].get<double>() <= 1e-11);
}

TEST_CASE("boundary: complex curve csv") {
  const auto r = run_cli("boundary --curve comtet-complex --samples 51");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 102);  // header + 2*51 - 1 mirrored samples
  CHECK(lines[0] == "param,re_z,im_z,residual");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto row = cells_of(lines[i]);
    REQUIRE(row.size() == 4);
    CHECK(std::fabs(num(row[3])) <= 1e-10);
  }
  // The middle sample is the real-axis point z = e.
  const auto mid = cells_of(lines[51]);
  CHECK(num(mid[0]) == 0.0);
  CHECK(num(mid[1]) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(num(mid[2]) == 0.0);
}

TEST_CASE("boundary: threshold sweep on a grid") {
  const auto r = run_cli("boundary --curve z-p --grid -1:1:5");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  const auto first = cells_of(lines[1]);
  const auto last = cells_of(lines[5]);
  CHECK(num(first[0]) == -1.0);
  CHECK(num(first[1]) == doctest::Approx(std::exp(3.0)).epsilon(1e-12));
  CHECK(num(last[0]) == 1.0);
  CHECK(num(last[1]) ==
        doctest::Approx(std::exp(3.14159265358979323846 / 2 - 1.0)).epsilon(1e-12));
}

TEST_CASE("accuracy: ratio sweep separates divergence from convergence") {
  const auto r = run_cli("accuracy --series comtet --grid 2:10:5 --metric ratio");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "param,n10,n20,n40");
  const auto at2 = cells_of(lines[1]);
  CHECK(num(at2[0]) == 2.0);
  CHECK(std::fabs(num(at2[3])) > 1e6);  // deep inside the divergence interval
  for (size_t i = 2; i < lines.size(); ++i) {
    const auto row = cells_of(lines[i]);
    CHECK(std::fabs(num(row[3]) - 1.0) <= 1e-3);  // z >= 4 converges
  }
}

TEST_CASE("branch-table: fixed table text") {
  const auto r = run_cli("branch-table");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(r.out.find("-6.4728") != std::string::npos);
  CHECK(r.out.find("-1/e") != std::string::npos);
  CHECK(lines[5].find("-1.0000") != std::string::npos);
}

TEST_CASE("coeffs: exact rational column") {
  const auto r = run_cli("coeffs --series improved --sigma-num 1 --sigma-den 3 --N 5");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "m,exact,value,asymptotic,ratio");
  const auto m5 = cells_of(lines[5]);
  CHECK(m5[1] == "46413/10485760");
  CHECK(num(m5[2]) == doctest::Approx(46413.0 / 10485760.0).epsilon(1e-15));
}

TEST_CASE("coeffs: ln-x methods agree exactly at a rational point") {
  const auto a = run_cli("coeffs --series wright-ln --w-num 2 --w-den 3 --N 6 --method eulerian");
  const auto b =
      run_cli("coeffs --series wright-ln --w-num 2 --w-den 3 --N 6 --method stirling2");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const auto la = lines_of(a.out), lb = lines_of(b.out);
  REQUIRE(la.size() == lb.size());
  for (size_t i = 1; i < la.size(); ++i) CHECK(cells_of(la[i])[1] == cells_of(lb[i])[1]);

  const auto r = run_cli("coeffs --series wright-ln --N 3");
  REQUIRE(r.code == 0);
  const auto row1 = cells_of(lines_of(r.out)[1]);
  CHECK(num(row1[1]) == doctest::Approx(0.36189625663488922).epsilon(1e-12));
}

TEST_CASE("constants: named values with residuals") {
  const auto r = run_cli("constants");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines[0] == "name,value,residual");
  bool saw_sigma1 = false, saw_omega = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto row = cells_of(lines[i]);
    if (row[0] == "sigma_1") {
      saw_sigma1 = true;
      CHECK(num(row[1]) == doctest::Approx(224.7909513).epsilon(1e-9));
    }
    if (row[0] == "omega_0") {
      saw_omega = true;
      CHECK(std::fabs(num(row[2])) <= 1e-15);
    }
  }
  CHECK(saw_sigma1);
  CHECK(saw_omega);
}

TEST_CASE("identities: green run and corrupted-table detection") {
  const auto ok = run_cli("identities --max-n 8");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const auto bad = run_cli("identities --max-n 8 --corrupt-triangle eulerian2:5:2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("exit code 2 on misuse") {
  CHECK(run_cli("eval --series comtet --x 1").code == 2);       // singular point
  CHECK(run_cli("eval --series comtet").code == 2);             // no argument given
  CHECK(run_cli("eval --series nope --x 10").code == 2);        // unknown series
  CHECK(run_cli("boundary --curve nope").code == 2);            // unknown curve
  CHECK(run_cli("boundary --curve z-p --grid 1:2").code == 2);  // malformed grid
  CHECK(run_cli("boundary --curve z-p-improved --grid 0:1:2").code == 2);  // p = 1 undefined
  CHECK(run_cli("accuracy --sweep p").code == 2);               // missing fixed --x
}

TEST_CASE("--out writes the table to a file") {
  const std::string path = "/tmp/wseries_cli_out_test.csv";
  std::remove(path.c_str());
  const auto r = run_cli("eval --series comtet --x 10 --N 40 --out " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "value_re,value_im,oracle_re,oracle_im,abs_error,rel_error,residual");
  std::remove(path.c_str());
}
