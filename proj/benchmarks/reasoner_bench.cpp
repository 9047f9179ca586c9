#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mtlog/engines.hpp"
#include "mtlog/eval.hpp"
#include "mtlog/parser.hpp"

using namespace mtlog;

namespace {

IntervalSet random_set(std::mt19937_64& rng, int parts, TimePoint span) {
  std::uniform_int_distribution<TimePoint> start(-span, span);
  std::uniform_int_distribution<TimePoint> width(0, 6);
  std::vector<Interval> out;
  for (int i = 0; i < parts; ++i) {
    TimePoint a = start(rng);
    out.push_back(Interval::closed(a, a + width(rng)));
  }
  return IntervalSet::of(std::move(out));
}

void BM_SetUnion(benchmark::State& state) {
  std::mt19937_64 rng(1);
  IntervalSet a = random_set(rng, static_cast<int>(state.range(0)), 1000);
  IntervalSet b = random_set(rng, static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(set_union(a, b));
  }
}
BENCHMARK(BM_SetUnion)->Arg(8)->Arg(64)->Arg(512);

void BM_DilatePast(benchmark::State& state) {
  std::mt19937_64 rng(2);
  IntervalSet s = random_set(rng, static_cast<int>(state.range(0)), 1000);
  Interval delta = Interval::closed(0, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilate_past(s, delta));
  }
}
BENCHMARK(BM_DilatePast)->Arg(8)->Arg(64)->Arg(512);

void BM_SinceSet(benchmark::State& state) {
  std::mt19937_64 rng(3);
  IntervalSet s1 = random_set(rng, static_cast<int>(state.range(0)), 1000);
  IntervalSet s2 = random_set(rng, static_cast<int>(state.range(0)), 1000);
  Interval delta = Interval::closed(0, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(since_set(s1, s2, delta));
  }
}
BENCHMARK(BM_SinceSet)->Arg(8)->Arg(64);

void BM_ConsequenceStep(benchmark::State& state) {
  ReasoningInstance inst = make_instance(
      parse_program("NoMoreParacetamol(x) :- Adult(x), diamondminus[0,6] TakesParacetamol(x)."),
      parse_dataset("Adult(John)@(-inf,+inf)\nTakesParacetamol(John)@8"));
  Interpretation closure = interpretation_from_dataset(inst.dataset);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_op(inst, closure));
  }
}
BENCHMARK(BM_ConsequenceStep);

void BM_WellFounded(benchmark::State& state) {
  ReasoningInstance inst = make_instance(
      parse_program("P :- G, not Q.\nQ :- G, not P.\nR :- diamondminus[0,2] P, not R."),
      parse_dataset("G@[0,3]"));
  EngineConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(well_founded_model(inst, cfg));
  }
}
BENCHMARK(BM_WellFounded);

void BM_StableEnumeration(benchmark::State& state) {
  ReasoningInstance inst = make_instance(parse_program("P :- G, not Q.\nQ :- G, not P."),
                                         parse_dataset("G@[0,1]"));
  EngineConfig cfg = EngineConfig::bounded(0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_stable2_bounded(inst, cfg));
  }
}
BENCHMARK(BM_StableEnumeration);

void BM_DifferentialInstance(benchmark::State& state) {
  std::mt19937_64 rng(42);
  RandomInstanceOptions opts;
  GeneratedInstance gen = random_instance(rng, opts);
  EngineConfig cfg = EngineConfig::bounded(0, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential_stable_check(gen.instance, cfg));
  }
}
BENCHMARK(BM_DifferentialInstance);

}  // namespace

BENCHMARK_MAIN();
