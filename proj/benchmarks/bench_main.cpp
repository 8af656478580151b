#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fracbam/bam_model.hpp"
#include "fracbam/charpoly.hpp"
#include "fracbam/fde.hpp"
#include "fracbam/hopf_tau3.hpp"
#include "fracbam/hopf_tau4.hpp"
#include "fracbam/lhs.hpp"
#include "fracbam/polynomial.hpp"
#include "fracbam/prcc.hpp"
#include "fracbam/quartic.hpp"

using namespace fracbam;

namespace {

CharCoeffs reference_coeffs() {
  const NetworkParams p = reference_network();
  return compute_coeffs(p.decay, linearize(p));
}

// Full-memory cost grows with the square of the step count.
void BM_SolveNetwork(benchmark::State& state) {
  const NetworkParams p = reference_network();
  FdeConfig cfg;
  cfg.order = 0.91;
  cfg.step = 0.01;
  cfg.horizon = static_cast<double>(state.range(0));
  cfg.delays = {0.1, 0.1};
  const auto x0 = reference_initial_a();
  const DelayedField rhs = make_rhs(p);
  for (auto _ : state) benchmark::DoNotOptimize(solve(rhs, cfg, x0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveNetwork)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->Complexity();

void BM_AberthSextic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> c(7);
  for (double& v : c) v = n(rng);
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_roots(std::span<const double>(c)));
}
BENCHMARK(BM_AberthSextic);

void BM_FerrariQuartic(benchmark::State& state) {
  const std::array<double, 5> q{1.3, -0.4, -2.1, 0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(ferrari_roots(q));
}
BENCHMARK(BM_FerrariQuartic);

void BM_Prcc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LhsDesign d = lhs_sample({{0.1, 0.6}, {0.1, 0.6}}, n, 7);
  const auto x1 = d.column(0), x2 = d.column(1);
  std::vector<std::vector<double>> ys(6, std::vector<double>(n));
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t i = 0; i < n; ++i) ys[k][i] = x1[i] * (1.0 + 0.1 * k) + x2[i] * x2[i];
  for (auto _ : state) benchmark::DoNotOptimize(prcc({x1, x2}, ys));
}
BENCHMARK(BM_Prcc)->Arg(200)->Arg(1000);

void BM_AnalyzeTau3(benchmark::State& state) {
  const CharCoeffs cc = reference_coeffs();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_tau3(cc, 0.91));
}
BENCHMARK(BM_AnalyzeTau3);

void BM_FindCriticalTau4(benchmark::State& state) {
  const CharCoeffs cc = reference_coeffs();
  const Tau4Mode mode = state.range(0) ? Tau4Mode::fix_tau1 : Tau4Mode::fix_tau2;
  const double fixed = state.range(0) ? 0.589277 : 0.06;
  for (auto _ : state) benchmark::DoNotOptimize(find_critical(cc, 0.91, mode, fixed));
}
BENCHMARK(BM_FindCriticalTau4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
