// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "fincat/gens.hpp"
#include "fincat/herm.hpp"
#include "fincat/kernels.hpp"

using namespace fincat;
using kernels::Execution;

namespace {

const gens::Bundle& m2() {
  static const auto b = gens::fixture("M2F4");
  return b;
}

const HermCategory& herm_m2() {
  static const auto h = herm_completion(*m2().involution);
  return h;
}

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(kernels::thread_count()));
}

void BM_Associativity(benchmark::State& state) {
  const auto& c = m2().category;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_associativity(c, 8, mode(state)).count);
  label(state);
}

// dag(g . f) == dag(f) . dag(g) on the completion of M2(F4)
void BM_DaggerContravariance(benchmark::State& state) {
  const auto& h = herm_m2();
  const auto& c = h.category;
  const auto& dag = h.dagger.dag;
  for (auto _ : state) {
    const auto scan = kernels::scan_pairs(
        c, [&](ObjId x, ObjId y, ObjId z, const BlockView&) { return c.block(z, y, x); },
        [&](const BlockView& rev, MorId g, MorId f, MorId gf) { return dag[gf] == rev.compose(dag[f], dag[g]); }, 8,
        mode(state));
    benchmark::DoNotOptimize(scan.count);
  }
  label(state);
}

void BM_SelfAdjointScan(benchmark::State& state) {
  const auto& h = herm_m2();
  const auto& dag = h.dagger.dag;
  for (auto _ : state) {
    const auto scan = kernels::scan_morphisms(dag.size(), [&](MorId m) { return dag[m] != m; }, 8, mode(state));
    benchmark::DoNotOptimize(scan.count);
  }
  label(state);
}

void BM_IsoPerObject(benchmark::State& state) {
  const auto& c = m2().category;
  for (auto _ : state) {
    const auto counts = kernels::map_indices<std::size_t>(
        c.object_count(),
        [&](std::size_t x) {
          std::size_t n = 0;
          for (MorId m : c.hom(static_cast<ObjId>(x), static_cast<ObjId>(x))) n += c.is_iso(m);
          return n;
        },
        mode(state));
    benchmark::DoNotOptimize(counts.data());
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_Associativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DaggerContravariance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelfAdjointScan)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IsoPerObject)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
