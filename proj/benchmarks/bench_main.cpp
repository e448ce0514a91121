#include <benchmark/benchmark.h>

#include "sepsub/axiom_gen.hpp"
#include "sepsub/builtin_schemes.hpp"
#include "sepsub/direct.hpp"
#include "sepsub/game.hpp"

namespace {

using namespace sepsub;

void BM_OmegaCycle(benchmark::State& state) {
  auto scheme = colouring_scheme(2);
  auto cycle = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GameSolver solver(cycle, scheme.rules[0], 2);
    benchmark::DoNotOptimize(solver.has_omega_strategy());
  }
}
BENCHMARK(BM_OmegaCycle)->Arg(5)->Arg(7)->Arg(9);

void BM_Survival(benchmark::State& state) {
  auto scheme = colouring_scheme(2);
  auto cycle = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GameSolver solver(cycle, scheme.rules[0], 2);
    auto result = solver.max_survival_rounds();
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Survival)->Arg(3)->Arg(5)->Arg(9);

void BM_BetaHat(benchmark::State& state) {
  auto scheme = colouring_scheme(2);
  int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(beta_hat(scheme.rules[0], r, 2));
}
BENCHMARK(BM_BetaHat)->Arg(1)->Arg(2);

void BM_DirectColouring(benchmark::State& state) {
  auto scheme = colouring_scheme(3);
  auto cycle = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_rule_direct(cycle, scheme.rules[0], 2));
}
BENCHMARK(BM_DirectColouring)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
