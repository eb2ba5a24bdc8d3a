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
#include "tanhscatter/solver.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TANHSCATTER_CLI_PATH) + " " + args +
                          " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CsvRow {
  std::vector<std::string> fields;
  double num(size_t i) const { return std::strtod(fields.at(i).c_str(), nullptr); }
  bool empty_at(size_t i) const { return fields.at(i).empty(); }
};

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    CsvRow row;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) row.fields.push_back(field);
    // trailing empty field after a final comma
    if (!line.empty() && line.back() == ',') row.fields.push_back("");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 1);                  // subcommand required
  CHECK(run_cli("coeffs").exit_code == 1);            // --E required
  CHECK(run_cli("coeffs --E").exit_code == 1);        // missing value
  CHECK(run_cli("frobnicate --E 2").exit_code == 1);  // unknown subcommand
  CHECK(run_cli("sweep --emin 2 --emax 1 --a 1").exit_code == 1);
  CHECK(run_cli("sweep --a 1").exit_code == 1);  // no range, no preset
}

TEST_CASE("coeffs: free particle") {
  const auto r = run_cli("coeffs --a 0 --b 1 --m 1 --E 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("R            = 0\n") != std::string::npos);
  CHECK(r.output.find("T            = 1\n") != std::string::npos);
  CHECK(r.output.find("region       = fully_propagating") !=
        std::string::npos);
  CHECK(r.output.find("superradiant = false") != std::string::npos);
}

TEST_CASE("coeffs: superradiant point") {
  const auto r = run_cli("coeffs --a 5 --b 2 --m 1 --E 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("superradiant = true") != std::string::npos);
  CHECK(r.output.find("R            = 1.936892404819") != std::string::npos);
  CHECK(r.output.find("region       = superradiant") != std::string::npos);
}

TEST_CASE("coeffs: threshold and propagation diagnostics exit 2") {
  const auto r = run_cli("coeffs --a 5 --b 2 --m 1 --E 6");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(run_cli("coeffs --a 5 --b 2 --m 1 --E -5").exit_code == 2);
}

TEST_CASE("sweep: fig2 preset reproduces the superradiant window") {
  const auto r = run_cli("sweep --fig2 --out cli_fig2.csv");
  REQUIRE(r.exit_code == 0);
  const auto text = slurp("cli_fig2.csv");
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 501);
  CHECK(text.rfind("E,R,T,region,superradiant\n", 0) == 0);
  CHECK(text.find("\r") == std::string::npos);
  CHECK(rows[1].num(0) == doctest::Approx(1.05).epsilon(1e-15));
  CHECK(rows[500].num(0) == doctest::Approx(10.0).epsilon(1e-15));
  int superradiant_rows = 0, skipped_rows = 0, propagating_rows = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    REQUIRE(row.fields.size() == 5);
    const double E = row.num(0);
    if (row.empty_at(1)) {
      ++skipped_rows;
      CHECK(row.empty_at(2));
      CHECK_FALSE(row.fields[3].empty());
      CHECK(row.empty_at(4));
      CHECK((std::abs(E - 4.0) <= 0.02 || std::abs(E - 6.0) <= 0.02));
      continue;
    }
    const double R = row.num(1), T = row.num(2);
    CHECK(R >= 0.0);
    if (row.fields[3] == "transmitted_evanescent") {
      CHECK(T == 0.0);
      CHECK(std::abs(R - 1.0) <= 1e-10);
    } else {
      ++propagating_rows;
      CHECK(std::abs(R + T - 1.0) <= 1e-10);
    }
    if (E > 1.05 && E < 3.95) {
      CHECK(R > 1.0);
      CHECK(T < 0.0);
      CHECK(row.fields[4] == "true");
      ++superradiant_rows;
    }
    if (E > 6.05) {
      CHECK(R <= 1.0);
      CHECK(T >= 0.0);
      CHECK(row.fields[4] == "false");
    }
  }
  CHECK(superradiant_rows > 100);
  CHECK(propagating_rows > 300);
  CHECK(skipped_rows >= 2);
}

TEST_CASE("sweep: byte-identical output for identical configs") {
  REQUIRE(run_cli("sweep --fig2 --steps 90 --out cli_det_a.csv").exit_code ==
          0);
  REQUIRE(run_cli("sweep --fig2 --steps 90 --out cli_det_b.csv").exit_code ==
          0);
  CHECK(slurp("cli_det_a.csv") == slurp("cli_det_b.csv"));
}

TEST_CASE("sweep: fig3 transitions are sharper near the upper threshold") {
  REQUIRE(run_cli("sweep --fig2 --out cli_fig3_base.csv").exit_code == 0);
  REQUIRE(run_cli("sweep --fig3 --out cli_fig3.csv").exit_code == 0);
  const auto f2 = parse_csv(slurp("cli_fig3_base.csv"));
  const auto f3 = parse_csv(slurp("cli_fig3.csv"));
  REQUIRE(f3.size() == 501);
  auto R_near = [](const std::vector<CsvRow>& rows, double E0) {
    double best = 1e300, R = 0.0;
    for (size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].empty_at(1)) continue;
      const double d = std::abs(rows[i].num(0) - E0);
      if (d < best) {
        best = d;
        R = rows[i].num(1);
      }
    }
    return R;
  };
  // just above threshold the steep profile reflects like the sharp step,
  // the smooth one is already nearly transparent
  CHECK(R_near(f3, 6.2) > R_near(f2, 6.2) + 0.3);
}

TEST_CASE("sweep: trivial two-row free-particle table") {
  REQUIRE(
      run_cli("sweep --emin 7 --emax 8 --steps 2 --a 0 --out cli_two.csv")
          .exit_code == 0);
  const auto rows = parse_csv(slurp("cli_two.csv"));
  REQUIRE(rows.size() == 3);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].fields[1] == "0");
    CHECK(rows[i].fields[2] == "1");
    CHECK(rows[i].fields[3] == "fully_propagating");
    CHECK(rows[i].fields[4] == "false");
  }
  CHECK(rows[1].fields[0] == "7");
  CHECK(rows[2].fields[0] == "8");
}

TEST_CASE("sweep: plot-script format emits the data and a script") {
  const auto r = run_cli(
      "sweep --fig2 --steps 64 --out cli_plot.csv --format plot-script");
  REQUIRE(r.exit_code == 0);
  const auto script = slurp("cli_plot.csv.gp");
  CHECK(script.find("plot \"cli_plot.csv\"") != std::string::npos);
  CHECK(script.find("using 1:2") != std::string::npos);
  CHECK(script.find("using 1:3") != std::string::npos);
  CHECK(parse_csv(slurp("cli_plot.csv")).size() == 65);
}

TEST_CASE("sweep: unwritable output exits 3") {
  CHECK(run_cli("sweep --fig2 --out /nonexistent_dir_zz/x.csv").exit_code ==
        3);
}

TEST_CASE("verify: seeded random agreement passes") {
  const auto r = run_cli("verify --n 3 --seed 11 --tol 1e-5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS (3/3 within 1e-05)") != std::string::npos);
}

TEST_CASE("verify: free particle single instance is numerically exact") {
  const auto r = run_cli("verify --n 1 --a 0 --E 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  const auto pos = r.output.find("|dR|=");
  REQUIRE(pos != std::string::npos);
  const double dR = std::strtod(r.output.c_str() + pos + 5, nullptr);
  CHECK(dR <= 1e-10);
}

TEST_CASE("verify: step-limit ladder converges") {
  const auto r = run_cli("verify --step-limit --a 5 --m 1 --E 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("b = 10000") != std::string::npos);
}

TEST_CASE("verify: unattainable tolerance exits 4") {
  const auto r =
      run_cli("verify --n 1 --a 5 --b 2 --m 1 --E 8 --tol 1e-16");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("wavefunction: current column is flat and matches the flux") {
  const auto r = run_cli(
      "wavefunction --a 5 --b 2 --m 1 --E 8 --xmin -4 --xmax 4 --points 41 "
      "--out cli_wave.csv");
  REQUIRE(r.exit_code == 0);
  const auto text = slurp("cli_wave.csv");
  CHECK(text.rfind("x,phi_re,phi_im,dphi_re,dphi_im,current\n", 0) == 0);
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 42);
  const auto p = tanhscatter::model::make_params(5.0, 2.0, 1.0);
  const auto d = tanhscatter::model::dispersion(p, 8.0);
  const double j_expect = 2.0 * p.b * d.mu.real();
  double jmin = 1e300, jmax = -1e300;
  for (size_t i = 1; i < rows.size(); ++i) {
    const double j = rows[i].num(5);
    jmin = std::min(jmin, j);
    jmax = std::max(jmax, j);
  }
  CHECK((jmax - jmin) / j_expect <= 1e-8);
  CHECK(std::abs(jmin - j_expect) / j_expect <= 1e-8);
}

TEST_CASE("wavefunction: free particle carries the plane-wave current") {
  REQUIRE(run_cli("wavefunction --a 0 --b 1 --m 1 --E 2 --points 11 "
                  "--out cli_free.csv")
              .exit_code == 0);
  const auto rows = parse_csv(slurp("cli_free.csv"));
  REQUIRE(rows.size() == 12);
  const double k = std::sqrt(3.0);
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(std::abs(rows[i].num(5) - k) <= 1e-12);
}

TEST_CASE("wavefunction: single point at the origin matches the library") {
  REQUIRE(run_cli("wavefunction --a 5 --b 2 --m 1 --E 8 --xmin 0 --xmax 0 "
                  "--points 1 --out cli_origin.csv")
              .exit_code == 0);
  const auto rows = parse_csv(slurp("cli_origin.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].fields[0] == "0");
  const auto p = tanhscatter::model::make_params(5.0, 2.0, 1.0);
  const auto s = tanhscatter::solver::wavefunction(
      p, 8.0, 0.0, tanhscatter::solver::Branch::Total);
  CHECK(std::abs(rows[1].num(1) - s.phi.real()) <= 1e-16);
  CHECK(std::abs(rows[1].num(2) - s.phi.imag()) <= 1e-16);
}

TEST_CASE("wavefunction: physics and I/O failures use distinct exit codes") {
  CHECK(run_cli("wavefunction --a 5 --b 2 --m 1 --E -5 --out cli_x.csv")
            .exit_code == 2);
  CHECK(run_cli("wavefunction --a 5 --b 2 --m 1 --E 8 "
                "--out /nonexistent_dir_zz/w.csv")
            .exit_code == 3);
  CHECK(run_cli("wavefunction --a 5 --b 2 --m 1 --E 8 --points 0").exit_code ==
        1);
}
