#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "braid3/certificate.hpp"

namespace {

using namespace braid3;

BraidWord knot_word(int length, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, 3);
  for (;;) {
    BraidWord w;
    for (int i = 0; i < length; ++i) {
      const int code = dist(rng);
      w.letters.push_back(ArtinLetter{code / 2 + 1, (code % 2) ? -1 : 1});
    }
    if (is_knot(w)) return w;
  }
}

void BM_ParseRender(benchmark::State& state) {
  const std::string text = render(knot_word(24, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(parse_word(text)));
  }
}
BENCHMARK(BM_ParseRender);

void BM_BurauAlexander(benchmark::State& state) {
  const BraidWord w = knot_word(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_poly(w).a2);
  }
}
BENCHMARK(BM_BurauAlexander)->Arg(8)->Arg(16)->Arg(24);

void BM_KauffmanStateSum(benchmark::State& state) {
  const Diagram d = build_diagram(knot_word(static_cast<int>(state.range(0)), 13));
  for (auto _ : state) {
    benchmark::DoNotOptimize(state_sum_alexander(d));
  }
}
BENCHMARK(BM_KauffmanStateSum)->Arg(6)->Arg(10)->Arg(14);

void BM_DeltaSpan(benchmark::State& state) {
  const Diagram d = build_diagram(knot_word(static_cast<int>(state.range(0)), 17));
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_span(d).thickness_upper);
  }
}
BENCHMARK(BM_DeltaSpan)->Arg(8)->Arg(12);

void BM_MinimizeBand(benchmark::State& state) {
  const BandWord w = artin_to_band(knot_word(static_cast<int>(state.range(0)), 19));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        minimize_band_length(w, RewriteBudget{20'000, 32}).length);
  }
}
BENCHMARK(BM_MinimizeBand)->Arg(6)->Arg(10);

void BM_FullPipeline(benchmark::State& state) {
  const AnyWord w = knot_word(10, 23);
  PipelineOptions opts;
  opts.search_budget = RewriteBudget{20'000, 32};
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(w, opts).to_json_line());
  }
}
BENCHMARK(BM_FullPipeline);

}  // namespace

BENCHMARK_MAIN();
