#include <benchmark/benchmark.h>

#include <cmath>

#include "tanhscatter/oracle.hpp"
#include "tanhscatter/solver.hpp"
#include "tanhscatter/specfun.hpp"

using tanhscatter::Complex;
namespace md = tanhscatter::model;
namespace sv = tanhscatter::solver;
namespace oc = tanhscatter::oracle;
namespace sf = tanhscatter::specfun;

namespace {

void BM_LogGamma(benchmark::State& state) {
  const Complex z(3.7, -2.1);
  for (auto _ : state) benchmark::DoNotOptimize(sf::log_gamma(z));
}
BENCHMARK(BM_LogGamma);

void BM_LogGammaReflected(benchmark::State& state) {
  const Complex z(-6.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(sf::log_gamma(z));
}
BENCHMARK(BM_LogGammaReflected);

void BM_Hyp2f1Series(benchmark::State& state) {
  const Complex p(0.3, 0.2), q(1.1, -0.4), c(0.9, 0.1), z(-0.4, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(sf::hyp2f1(p, q, c, z));
}
BENCHMARK(BM_Hyp2f1Series);

void BM_Hyp2f1Pfaff(benchmark::State& state) {
  const Complex p(0.3, 0.2), q(1.1, -0.4), c(0.9, 0.1), z(-1.5, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(sf::hyp2f1(p, q, c, z));
}
BENCHMARK(BM_Hyp2f1Pfaff);

void BM_Hyp2f1Inverse(benchmark::State& state) {
  const Complex p(0.3, 0.2), q(1.1, -0.4), c(0.9, 0.1), z(-40.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(sf::hyp2f1(p, q, c, z));
}
BENCHMARK(BM_Hyp2f1Inverse);

void BM_Transport(benchmark::State& state) {
  const auto p = md::make_params(5.0, 2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sv::transport(p, 8.0));
}
BENCHMARK(BM_Transport);

void BM_WavefunctionTotal(benchmark::State& state) {
  const auto p = md::make_params(5.0, 2.0, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sv::wavefunction(p, 8.0, -1.3, sv::Branch::Total));
}
BENCHMARK(BM_WavefunctionTotal);

void BM_OracleIntegrate(benchmark::State& state) {
  const auto p = md::make_params(5.0, 2.0, 1.0);
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oc::integrate_scattering(p, 8.0, tol));
}
BENCHMARK(BM_OracleIntegrate)->Arg(6)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
