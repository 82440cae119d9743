#include <benchmark/benchmark.h>

#include "ffcount/counting.hpp"

using namespace ffcount;

namespace {

void BM_EnumeratePoints(benchmark::State& state) {
  FieldPtr field = field_for_order(state.range(0));
  const int64_t r = state.range(1);
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto points = enumerate_points(field, 1, r, workers);
    benchmark::DoNotOptimize(points);
  }
  state.SetItemsProcessed(state.iterations() *
                          candidate_count(field->q(), 1, r).convert_to<int64_t>());
}
BENCHMARK(BM_EnumeratePoints)
    ->Args({2, 5, 1})
    ->Args({2, 5, 4})
    ->Args({3, 4, 1})
    ->Args({3, 4, 4})
    ->Unit(benchmark::kMillisecond);

void BM_CountPoints(benchmark::State& state) {
  FieldPtr field = field_for_order(state.range(0));
  const int64_t r = state.range(1);
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) {
    CountReport report = count_points(field, 1, r, workers);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() *
                          candidate_count(field->q(), 1, r).convert_to<int64_t>());
}
BENCHMARK(BM_CountPoints)
    ->Args({2, 6, 1})
    ->Args({2, 6, 4})
    ->Args({3, 5, 1})
    ->Args({3, 5, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SphereOrbits(benchmark::State& state) {
  FieldPtr field = field_for_order(state.range(0));
  Poly f = Poly::variable(field);
  const int64_t r = state.range(1);
  const ScanMode mode = state.range(2) ? ScanMode::kClosedForm : ScanMode::kEnumerate;
  for (auto _ : state) {
    CountReport report = count_divisible_orbits(f, 1, r, mode);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_SphereOrbits)
    ->Args({2, 6, 0})
    ->Args({2, 6, 1})
    ->Args({3, 5, 0})
    ->Args({3, 5, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_Factor(benchmark::State& state) {
  FieldPtr field = field_for_order(state.range(0));
  const int d = static_cast<int>(state.range(1));
  std::vector<Poly> inputs = monic_polys(field, d);
  for (auto _ : state) {
    for (const Poly& f : inputs) {
      auto factors = factor(f);
      benchmark::DoNotOptimize(factors);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(inputs.size()));
}
BENCHMARK(BM_Factor)->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
