// Serial vs OpenMP for the three parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "purerec/expr.hpp"
#include "purerec/lattice.hpp"
#include "purerec/modular.hpp"
#include "purerec/series.hpp"

using namespace purerec;
using namespace purerec::modular;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(1) ? ExecPolicy::Parallel : ExecPolicy::Serial;
}

void BM_WalkDP(benchmark::State& state) {
  const StepSet king = StepSet::parse("[[1,0],[0,1],[1,1]]");
  const long side = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(walk_dp(king, {side, side}, policy_of(state)));
}

void BM_ExpFill(benchmark::State& state) {
  const HyperexpSpec s = parse_hyperexp("exp(x1 - 2*x2 + x1*x2 - 3*x2^2)");
  const long side = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(mseries_from_spec(s, {side, side}, policy_of(state)));
}

void BM_ModularRref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const u64 p = prime(0);
  std::mt19937_64 rng(5);
  Matrix m(n, n + 1);
  for (u64& v : m.data) v = rng() % p;
  for (auto _ : state) benchmark::DoNotOptimize(rref(m, p, policy_of(state)));
}

}  // namespace

BENCHMARK(BM_WalkDP)->ArgsProduct({{500, 1500}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpFill)->ArgsProduct({{20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModularRref)->ArgsProduct({{200, 600}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
