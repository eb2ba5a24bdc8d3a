#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tanhscatter/oracle.hpp"
#include "tanhscatter/solver.hpp"

namespace tanhscatter::cli {
namespace {

namespace md = tanhscatter::model;
namespace sv = tanhscatter::solver;
namespace oc = tanhscatter::oracle;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(tanhscatter::Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void close_out(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

struct GlobalFlags {
  double a = 0.0, b = 1.0, m = 1.0;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* m_opt = nullptr;
};

int cmd_coeffs(const GlobalFlags& g, double E) {
  const auto p = md::make_params(g.a, g.b, g.m);
  const auto d = md::oriented_dispersion(p, E);
  const auto amp = sv::amplitudes(p, E);
  const auto t = sv::transport(p, E);
  std::printf("E            = %s\n", fmt(E).c_str());
  std::printf("nu           = %s\n", fmt(d.nu).c_str());
  std::printf("mu           = %s\n", fmt(d.mu).c_str());
  std::printf("lambda       = %s\n", fmt(d.lam).c_str());
  std::printf("A            = %s\n", fmt(amp.A).c_str());
  std::printf("B            = %s\n", fmt(amp.B).c_str());
  std::printf("R            = %s\n", fmt(t.R).c_str());
  std::printf("T            = %s\n", fmt(t.T).c_str());
  std::printf("region       = %s\n", md::to_label(t.region.kind));
  std::printf("superradiant = %s\n", t.superradiant ? "true" : "false");
  return 0;
}

std::string sweep_row(const md::PotentialParams& p, double E, double margin) {
  const double thresholds[4] = {p.a + p.m, p.a - p.m, -p.a + p.m, -p.a - p.m};
  bool skip = false;
  for (double t : thresholds) skip = skip || std::abs(E - t) <= margin;
  if (!skip) {
    try {
      const auto t = sv::transport(p, E);
      return fmt(E) + "," + fmt(t.R) + "," + fmt(t.T) + "," +
             md::to_label(t.region.kind) + "," +
             (t.superradiant ? "true" : "false") + "\n";
    } catch (const ThresholdError&) {
      skip = true;
    } catch (const PropagationError&) {
      skip = true;
    }
  }
  const auto r = md::oriented_region(p, E);
  return fmt(E) + ",,," + md::to_label(r.kind) + ",\n";
}

int cmd_sweep(const GlobalFlags& g, double emin, double emax, int steps,
              double margin, const std::string& out_path,
              const std::string& format) {
  const auto p = md::make_params(g.a, g.b, g.m);
  std::vector<std::string> rows(static_cast<size_t>(steps));
  auto fill = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const double E =
          steps == 1 ? emin : emin + (emax - emin) * i / (steps - 1);
      rows[static_cast<size_t>(i)] = sweep_row(p, E, margin);
    }
  };
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw > 1 && steps >= 64) {
    const int nthread = static_cast<int>(std::min(hw, 8u));
    std::vector<std::thread> pool;
    const int chunk = (steps + nthread - 1) / nthread;
    for (int t = 0; t < nthread; ++t) {
      const int lo = t * chunk, hi = std::min(steps, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  } else {
    fill(0, steps);
  }

  auto out = open_out(out_path);
  out << "E,R,T,region,superradiant\n";
  for (const auto& row : rows) out << row;
  close_out(out, out_path);

  if (format == "plot-script") {
    const std::string script_path = out_path + ".gp";
    auto gp = open_out(script_path);
    gp << "set datafile separator \",\"\n"
       << "set xlabel \"E\"\n"
       << "set ylabel \"coefficient\"\n"
       << "set grid\n"
       << "plot \"" << out_path << "\" skip 1 using 1:2 with lines"
       << " title \"R\", \\\n"
       << "     \"" << out_path << "\" skip 1 using 1:3 with lines"
       << " title \"T\"\n";
    close_out(gp, script_path);
    std::printf("wrote %s and %s\n", out_path.c_str(), script_path.c_str());
  } else {
    std::printf("wrote %s (%d rows)\n", out_path.c_str(), steps);
  }
  return 0;
}

int cmd_verify_step_limit(const GlobalFlags& g, double E, double tol) {
  const auto step = oc::step_reference(md::make_params(g.a, 1.0, g.m), E);
  double prev = -1.0;
  double last = 0.0;
  bool monotone = true;
  for (double b : {1e1, 1e2, 1e3, 1e4}) {
    const auto t = sv::transport(md::make_params(g.a, b, g.m), E);
    const double gap = std::abs(t.R - step.R);
    std::printf("b = %-7g |R - R_step| = %s\n", b, fmt(gap).c_str());
    if (prev >= 0.0 && gap >= prev) monotone = false;
    prev = gap;
    last = gap;
  }
  const bool ok = monotone && last <= tol;
  std::printf("%s (monotone %s, final gap %s vs tol %s)\n",
              ok ? "PASS" : "FAIL", monotone ? "yes" : "no",
              fmt(last).c_str(), fmt(tol).c_str());
  return ok ? 0 : 4;
}

int cmd_verify(const GlobalFlags& g, bool have_E, double E, int n,
               unsigned long long seed, double tol) {
  std::mt19937_64 eng(seed);
  auto uniform = [&](double lo, double hi) {
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  int failures = 0;
  for (int i = 0; i < n; ++i) {
    const double a = g.a_opt->count() ? g.a : uniform(0.5, 5.0);
    const double b = g.b_opt->count() ? g.b : uniform(0.5, 10.0);
    const double m = g.m_opt->count() ? g.m : uniform(0.5, 2.0);
    const double Ei = have_E ? E : a + m + 0.2 + uniform(0.0, 5.0);
    const auto p = md::make_params(a, b, m);
    const auto t = sv::transport(p, Ei);
    const auto r =
        oc::integrate_scattering(p, Ei, std::max(tol * 1e-3, 1e-12));
    const double dR = std::abs(t.R - r.R_num);
    const double dT = std::abs(t.T - r.T_num);
    const bool ok = dR <= tol && dT <= tol;
    if (!ok) ++failures;
    std::printf("%2d  a=%-9.6g b=%-9.6g m=%-9.6g E=%-9.6g |dR|=%-12.5g "
                "|dT|=%-12.5g %s\n",
                i + 1, a, b, m, Ei, dR, dT, ok ? "ok" : "FAIL");
  }
  if (failures == 0) {
    std::printf("PASS (%d/%d within %g)\n", n, n, tol);
    return 0;
  }
  std::printf("FAIL (%d/%d exceeded %g)\n", failures, n, tol);
  return 4;
}

int cmd_wavefunction(const GlobalFlags& g, double E, double xmin, double xmax,
                     int points, const std::string& out_path) {
  const auto p = md::make_params(g.a, g.b, g.m);
  auto out = open_out(out_path);
  out << "x,phi_re,phi_im,dphi_re,dphi_im,current\n";
  for (int i = 0; i < points; ++i) {
    const double x =
        points == 1 ? xmin : xmin + (xmax - xmin) * i / (points - 1);
    const auto s = sv::wavefunction(p, E, x, sv::Branch::Total);
    const double j = sv::current(s.phi, s.dphi);
    out << fmt(x) << "," << fmt(s.phi.real()) << "," << fmt(s.phi.imag())
        << "," << fmt(s.dphi.real()) << "," << fmt(s.dphi.imag()) << ","
        << fmt(j) << "\n";
  }
  close_out(out, out_path);
  std::printf("wrote %s (%d rows)\n", out_path.c_str(), points);
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"scattering by a smooth hyperbolic-tangent potential step"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  g.a_opt = app.add_option("--a", g.a, "potential strength (may be negative)")
                ->capture_default_str();
  g.b_opt = app.add_option("--b", g.b, "potential steepness (> 0)")
                ->capture_default_str();
  g.m_opt = app.add_option("--m", g.m, "particle mass (>= 0)")
                ->capture_default_str();

  auto* coeffs = app.add_subcommand(
      "coeffs", "single-point amplitudes and transport coefficients");
  double coeffs_E = 0.0;
  coeffs->add_option("--E", coeffs_E, "energy")->required();

  auto* sweep =
      app.add_subcommand("sweep", "R and T over a uniform energy grid (CSV)");
  double emin = 0.0, emax = 0.0, margin = 0.02;
  int steps = 500;
  std::string sweep_out = "sweep.csv", sweep_format = "csv";
  bool fig2 = false, fig3 = false;
  auto* emin_opt = sweep->add_option("--emin", emin, "lowest energy");
  auto* emax_opt = sweep->add_option("--emax", emax, "highest energy");
  auto* steps_opt =
      sweep->add_option("--steps", steps, "row count")->capture_default_str();
  sweep->add_option("--margin", margin,
                    "skip rows within this distance of a threshold")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "output CSV path")
      ->capture_default_str();
  sweep->add_option("--format", sweep_format, "csv or plot-script")
      ->check(CLI::IsMember({"csv", "plot-script"}))
      ->capture_default_str();
  sweep->add_flag("--fig2", fig2, "preset: a=5 b=2 m=1, E in [1.05,10], 500");
  sweep->add_flag("--fig3", fig3, "preset: a=5 b=50 m=1, E in [1.05,10], 500");

  auto* verify = app.add_subcommand(
      "verify", "closed form versus independent integration");
  int n = 20;
  unsigned long long seed = 7;
  double vtol = 1e-6, verify_E = 0.0;
  bool step_limit = false;
  verify->add_option("--n", n, "instance count")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  auto* vtol_opt = verify->add_option("--tol", vtol, "pass tolerance")
                       ->capture_default_str();
  auto* verify_E_opt =
      verify->add_option("--E", verify_E, "fixed energy (otherwise drawn)");
  verify->add_flag("--step-limit", step_limit,
                   "check convergence to the sharp-step reference instead");

  auto* wave = app.add_subcommand(
      "wavefunction", "sampled total wavefunction and current (CSV)");
  double wave_E = 0.0, xmin = -5.0, xmax = 5.0;
  int points = 401;
  std::string wave_out = "wavefunction.csv";
  wave->add_option("--E", wave_E, "energy")->required();
  wave->add_option("--xmin", xmin, "left edge")->capture_default_str();
  wave->add_option("--xmax", xmax, "right edge")->capture_default_str();
  wave->add_option("--points", points, "sample count")->capture_default_str();
  wave->add_option("--out", wave_out, "output CSV path")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(g, coeffs_E);
    if (sweep->parsed()) {
      if (fig2 || fig3) {
        if (!g.a_opt->count()) g.a = 5.0;
        if (!g.b_opt->count()) g.b = fig3 ? 50.0 : 2.0;
        if (!g.m_opt->count()) g.m = 1.0;
        if (!emin_opt->count()) emin = 1.05;
        if (!emax_opt->count()) emax = 10.0;
        if (!steps_opt->count()) steps = 500;
      } else if (!emin_opt->count() || !emax_opt->count()) {
        std::cerr << "error: sweep needs --emin and --emax (or a preset)\n";
        return 1;
      }
      if (!(emin < emax) || steps < 2 || margin < 0.0) {
        std::cerr << "error: need emin < emax, steps >= 2, margin >= 0\n";
        return 1;
      }
      return cmd_sweep(g, emin, emax, steps, margin, sweep_out, sweep_format);
    }
    if (verify->parsed()) {
      if (step_limit) {
        const double tol = vtol_opt->count() ? vtol : 1e-3;
        if (!verify_E_opt->count()) {
          std::cerr << "error: --step-limit needs --E\n";
          return 1;
        }
        return cmd_verify_step_limit(g, verify_E, tol);
      }
      if (n < 1) {
        std::cerr << "error: need --n >= 1\n";
        return 1;
      }
      return cmd_verify(g, verify_E_opt->count() > 0, verify_E, n, seed, vtol);
    }
    if (wave->parsed()) {
      if (points < 1 || (points > 1 && !(xmin < xmax))) {
        std::cerr << "error: need points >= 1 and xmin < xmax\n";
        return 1;
      }
      return cmd_wavefunction(g, wave_E, xmin, xmax, points, wave_out);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const tanhscatter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace tanhscatter::cli
