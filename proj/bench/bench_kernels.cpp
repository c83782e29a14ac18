// Serial reference against the OpenMP kernels on the worked example.

#include <benchmark/benchmark.h>

#include <vector>

#include "coupled_fp/conditions.hpp"
#include "coupled_fp/problems.hpp"

using namespace coupled_fp;

namespace {

const RealProblem& example() {
  static const RealProblem p = samet_example();
  return p;
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_StrictContraction(benchmark::State& state) {
  const CheckOptions opts{static_cast<std::size_t>(state.range(0)), 42, mode(state)};
  for (auto _ : state) benchmark::DoNotOptimize(check_strict_contraction(example().op, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SymmetricBand(benchmark::State& state) {
  const CheckOptions opts{static_cast<std::size_t>(state.range(0)), 42, mode(state)};
  const std::vector<double> eps{0.1, 1.0, 10.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_symmetric_mk(example().op, std::span<const double>(eps), example().delta_rule, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_RawScan(benchmark::State& state) {
  const auto batch = comparable_quadruples(*example().space, static_cast<std::size_t>(state.range(0)), 7);
  const auto items = std::span<const Quadruple<double>>(batch.items);
  const auto& op = example().op;
  auto eval = [&](const Quadruple<double>& q) { return detail::evaluate_strict(op, q).outcome; };
  for (auto _ : state) benchmark::DoNotOptimize(scan(mode(state), items, eval));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}

}  // namespace

BENCHMARK(BM_StrictContraction)->ArgsProduct({{10000, 100000, 1000000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetricBand)->ArgsProduct({{10000, 100000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK(BM_RawScan)->ArgsProduct({{100000, 1000000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
