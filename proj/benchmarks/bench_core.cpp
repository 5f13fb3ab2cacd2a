#include <benchmark/benchmark.h>

#include "toepspec/analysis.hpp"
#include "toepspec/eig.hpp"
#include "toepspec/matrices.hpp"
#include "toepspec/symbol.hpp"

namespace {

using namespace toepspec;

TwoStepSymbol half_symbol() { return preset_pm1(make_rational_angle(2, 1)); }

void BM_toeplitz(benchmark::State& state) {
  const auto sym = half_symbol();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz(sym, n));
}
BENCHMARK(BM_toeplitz)->Arg(64)->Arg(256)->Arg(512);

void BM_b_exact(benchmark::State& state) {
  const auto sym = half_symbol();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(b_exact(sym, n));
}
BENCHMARK(BM_b_exact)->Arg(64)->Arg(128)->Arg(256);

void BM_b_series(benchmark::State& state) {
  const auto sym = half_symbol();
  const long tail = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(b_series(sym, 16, tail));
}
BENCHMARK(BM_b_series)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_eigenvalues(benchmark::State& state) {
  const auto b = b_exact(half_symbol(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_hermitian(b));
}
BENCHMARK(BM_eigenvalues)->Arg(64)->Arg(128)->Arg(256);

void BM_f_matrix(benchmark::State& state) {
  const auto sym = half_symbol();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_matrix(sym, n, 4));
}
BENCHMARK(BM_f_matrix)->Arg(64)->Arg(256);

void BM_theorem1_grid(benchmark::State& state) {
  const auto sym = half_symbol();
  std::vector<int> grid;
  for (int n = 40; n <= 40 + 4 * static_cast<int>(state.range(0)); n += 4)
    grid.push_back(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_periodicity_rate(sym, 0.1, grid, 4));
}
BENCHMARK(BM_theorem1_grid)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
