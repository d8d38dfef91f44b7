// Serial reference kernels against their OpenMP counterparts on the oracle's
// exhaustive scans.
#include <benchmark/benchmark.h>

#include "gradedring/dsl.hpp"
#include "gradedring/oracle.hpp"

using namespace gradedring;

namespace {

const FiniteAlgebra& algebra(int which) {
  static const FiniteAlgebra small(dsl::load_ring(
      "ring A { base Zmod 12\n grading Z\n gen x deg 1\n rel x^3 }").ring);
  static const FiniteAlgebra large(dsl::load_ring(
      "ring T { base Zmod 5\n grading Zmod 5\n gen x deg 1\n rel x^5 - 1 }").ring);
  return which == 0 ? small : large;
}

template <KernelMode Mode>
void BM_Scans(benchmark::State& state) {
  const FiniteAlgebra& alg = algebra(static_cast<int>(state.range(0)));
  const ElementSet universe = kernels::all_elements(alg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::run_scans(alg, universe, Mode));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(alg.size()));
}

template <KernelMode Mode>
void BM_UnitInverses(benchmark::State& state) {
  const FiniteAlgebra& alg = algebra(static_cast<int>(state.range(0)));
  const ElementSet universe = kernels::all_elements(alg);
  for (auto _ : state) {
    if constexpr (Mode == KernelMode::Serial) {
      benchmark::DoNotOptimize(kernels::serial::unit_inverses(alg, universe));
    } else {
      benchmark::DoNotOptimize(kernels::parallel::unit_inverses(alg, universe));
    }
  }
}

}  // namespace

BENCHMARK(BM_Scans<KernelMode::Serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scans<KernelMode::Parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitInverses<KernelMode::Serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitInverses<KernelMode::Parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
