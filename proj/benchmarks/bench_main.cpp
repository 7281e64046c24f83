#include <benchmark/benchmark.h>

#include "pencil/alexander.hpp"
#include "pencil/battery.hpp"
#include "pencil/curve.hpp"
#include "pencil/monodromy.hpp"
#include "pencil/script.hpp"

using namespace pencil;

namespace {

CurveSpec spec_of(const benchmark::State& st) {
  return CurveSpec::with_default_alphas(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
}

void BM_FiberRoots(benchmark::State& st) {
  const CurveSpec spec = spec_of(st);
  const UniPoly f = fiber_polynomial(spec, base_configuration(spec).gamma0);
  for (auto _ : st) benchmark::DoNotOptimize(solve_fiber_roots(f));
}
BENCHMARK(BM_FiberRoots)->Args({3, 2})->Args({4, 3})->Args({5, 3});

void BM_TrackFirstLoop(benchmark::State& st) {
  const CurveSpec spec = spec_of(st);
  const auto m = compute_monodromy(spec);
  const auto family = fiber_family(spec);
  const auto start = base_fiber(spec, m.system.base);
  for (auto _ : st) benchmark::DoNotOptimize(track_loop(family, m.system.loops.front(), start));
}
BENCHMARK(BM_TrackFirstLoop)->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_Monodromy(benchmark::State& st) {
  const CurveSpec spec = spec_of(st);
  MonodromyOptions opts;
  opts.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(compute_monodromy(spec, opts));
}
BENCHMARK(BM_Monodromy)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_HomCount(benchmark::State& st) {
  const Presentation P = expected_projective(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  const auto& G = battery_group("S4");
  for (auto _ : st) benchmark::DoNotOptimize(count_homomorphisms(P, G));
}
BENCHMARK(BM_HomCount)->Args({3, 2})->Args({4, 3});

void BM_Battery(benchmark::State& st) {
  const Presentation P = to_presentation(derive_relations_symbolic(static_cast<int>(st.range(0)),
                                                                   static_cast<int>(st.range(1))));
  for (auto _ : st) benchmark::DoNotOptimize(compute_battery(P));
}
BENCHMARK(BM_Battery)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_Alexander(benchmark::State& st) {
  const int p = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  const Presentation a = expected_affine(p, q);
  std::vector<bool> flags(static_cast<std::size_t>(q + 1), true);
  flags.back() = false;
  const DegreeMap d = meridian_degree_map(a, flags);
  for (auto _ : st) benchmark::DoNotOptimize(alexander_polynomial(a, d));
}
BENCHMARK(BM_Alexander)->Args({3, 2})->Args({4, 3})->Args({5, 4});

void BM_ScriptedReduction(benchmark::State& st) {
  const int p = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  const RelationSet rs = derive_relations_symbolic(p, q);
  for (auto _ : st) benchmark::DoNotOptimize(scripted_reduction(rs, p, q));
}
BENCHMARK(BM_ScriptedReduction)->Args({3, 2})->Args({5, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
