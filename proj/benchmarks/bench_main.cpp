#include <cmath>
#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "umbracal/fft.hpp"
#include "umbracal/heat.hpp"
#include "umbracal/lacunary.hpp"
#include "umbracal/numbers.hpp"
#include "umbracal/polynomials.hpp"
#include "umbracal/quadrature.hpp"
#include "umbracal/umbral.hpp"

namespace {

using namespace umbracal;

void BM_HermiteTable(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(3, r));
}
BENCHMARK(BM_HermiteTable)->Arg(30)->Arg(120)->Arg(480);

void BM_HermiteM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_m(3, n, 0.7, -0.4));
}
BENCHMARK(BM_HermiteM)->Arg(8)->Arg(64);

void BM_UmbralNewtonBinomial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const UmbraId u{3};
  const DeferredRoot root{u, -0.4};
  for (auto _ : state) {
    const auto p = pow(UmbralPoly::constant(0.7) + UmbralPoly::monomial(u, 2, 1.0), n);
    benchmark::DoNotOptimize(project(p, std::span(&root, 1)));
  }
}
BENCHMARK(BM_UmbralNewtonBinomial)->Arg(8)->Arg(32);

void BM_Fft(benchmark::State& state) {
  std::vector<std::complex<double>> data(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = std::sin(0.01 * static_cast<double>(i));
  for (auto _ : state) {
    fft(data);
    inverse_fft(data);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Fft)->Arg(1024)->Arg(8192)->Arg(65536);

void BM_SinhSinhGaussian(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate([](double x) { return std::exp(-x * x); }, QuadratureSpec::whole_line()));
  }
}
BENCHMARK(BM_SinhSinhGaussian);

Field gaussian(const Grid& g) {
  return Field::sample(g, [](double x) { return std::complex<double>(std::exp(-x * x)); });
}

void BM_EvolveSpectral(benchmark::State& state) {
  const Grid g{-204.8, 204.8, static_cast<int>(state.range(0))};
  const Field f = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_spectral(f, {3, 0.5, 1}));
}
BENCHMARK(BM_EvolveSpectral)->Arg(2048)->Arg(8192);

void BM_EvolveAiry(benchmark::State& state) {
  const Grid g{-51.2, 51.2, static_cast<int>(state.range(0))};
  const Field f = gaussian(g);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_airy(f, 0.5));
}
BENCHMARK(BM_EvolveAiry)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_Lacunary(benchmark::State& state) {
  const auto route = static_cast<LacunaryRoute>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lacunary(route, 0.8, -0.2, -0.1));
}
BENCHMARK(BM_Lacunary)->DenseRange(0, 2)->ArgName("route");

}  // namespace

BENCHMARK_MAIN();
