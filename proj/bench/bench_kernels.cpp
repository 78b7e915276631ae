// Serial reference against the OpenMP kernels on representative inputs.
// Run with --benchmark_filter to pick a kernel; thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "chs/curve.hpp"
#include "chs/kernels.hpp"
#include "chs/surface.hpp"

using namespace chs;

namespace {

SurfaceSpec figure5() {
  return {make_curve(9, 2, Rational(2)), CongruenceSpec{Rational(-1)}, Placement{Rational(0), Rational(0), make_rational(1, 2)}};
}

std::vector<double> grid(double period, std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = period * static_cast<double>(i) / static_cast<double>(n);
  return ts;
}

// Dense closed polyline along CH(7,3,1/4).
std::vector<Vec2> polyline(std::size_t n) {
  const CurveSpec c = make_curve(7, 3, make_rational(1, 4));
  std::vector<Vec2> pts;
  for (double t : grid(c.period(), n)) {
    const double r = polar_radius(c, t);
    pts.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return pts;
}

void sample_rows(benchmark::State& state, kernels::Exec exec) {
  const SurfaceSpec s = figure5();
  const auto ts = grid(s.curve.period(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_rows(s, ts, 96, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void segment_crossings(benchmark::State& state, kernels::Exec exec) {
  const auto pts = polyline(static_cast<std::size_t>(state.range(0)));
  const std::vector<std::uint8_t> usable(pts.size(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::segment_crossings(pts, usable, exec));
}

void evaluate(benchmark::State& state, kernels::Exec exec) {
  const CurveSpec c = make_curve(9, 2, Rational(2));
  const auto ts = grid(c.period(), static_cast<std::size_t>(state.range(0)));
  const kernels::ScalarFn f = [&](double t) { return polar_radius(c, t); };
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate(f, ts, exec));
}

void residual(benchmark::State& state, kernels::Exec exec) {
  const NumericPoly p(implicit_equation(make_curve(7, 3, make_rational(1, 4))));
  const auto pts = polyline(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_scaled_residual(p, pts, exec));
}

} // namespace

BENCHMARK_CAPTURE(sample_rows, serial, kernels::Exec::Serial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sample_rows, omp, kernels::Exec::Parallel)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(segment_crossings, serial, kernels::Exec::Serial)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(segment_crossings, omp, kernels::Exec::Parallel)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(evaluate, serial, kernels::Exec::Serial)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(evaluate, omp, kernels::Exec::Parallel)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(residual, serial, kernels::Exec::Serial)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(residual, omp, kernels::Exec::Parallel)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
