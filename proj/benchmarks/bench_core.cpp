#include <benchmark/benchmark.h>

#include <cmath>

#include "csswg/dynamics1d.hpp"
#include "csswg/dynamics2d.hpp"
#include "csswg/gauge.hpp"
#include "csswg/reduction.hpp"
#include "csswg/spectral.hpp"

using namespace csswg;

namespace {

Field2D ansatz_state(const Grid2D& g, double eps, double beta) {
  const Reduction red(g, eps);
  return red.build_ansatz(oscillator_ground_state(g.x()), beta);
}

void BM_Transform2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid2D g(n, n, 8.0, 8.0);
  const Spectral2D sp(g);
  const Field2D f = sample<cplx>(g, [](double x, double y) { return std::exp(-x * x - y * y); });
  for (auto _ : state) benchmark::DoNotOptimize(sp.transform(f, Direction::Forward));
}
BENCHMARK(BM_Transform2D)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_VectorPotential(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  const Grid2D g = reference_grid(eps);
  const GaugeSolver solver(g);
  const RealField2D rho = abs_squared(ansatz_state(g, eps, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(solver.vector_potential(rho, 1.0));
}
BENCHMARK(BM_VectorPotential)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Rhs2D(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  const Grid2D g = reference_grid(eps);
  Params2D p;
  p.eps = eps;
  p.beta = 1.0;
  p.g = 1.0;
  const Model2D m(g, p);
  const Field2D psi = ansatz_state(g, eps, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(m.rhs(psi));
}
BENCHMARK(BM_Rhs2D)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Step2D(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  const Grid2D g = reference_grid(eps);
  Params2D p;
  p.eps = eps;
  p.beta = 1.0;
  const Model2D m(g, p);
  State2D s{ansatz_state(g, eps, 1.0), 0.0, 0};
  for (auto _ : state) step_2d(m, s);
}
BENCHMARK(BM_Step2D)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Step1D(benchmark::State& state) {
  const Grid1D g(static_cast<int>(state.range(0)), 16.0);
  const Model1D m(g, Params1D{1.0, 1.0, true, 1e-3, 1.0});
  State1D s{oscillator_ground_state(g), 0.0, 0};
  for (auto _ : state) step_1d(m, s);
}
BENCHMARK(BM_Step1D)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
