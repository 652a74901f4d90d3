#include <benchmark/benchmark.h>

#include "wld/classify.hpp"
#include "wld/corpus.hpp"
#include "wld/finite_group.hpp"
#include "wld/int_matrix.hpp"
#include "wld/invariants.hpp"
#include "wld/moves.hpp"
#include "wld/random_diagram.hpp"

using namespace wld;

namespace {

// Crossing count grows with the argument; the seed is fixed so runs compare.
Diagram sample(int crossings) {
  Rng rng(static_cast<std::uint64_t>(crossings) * 7919);
  Diagram best = random_diagram(rng, crossings, 2);
  for (int i = 0; i < 20 && best.crossing_count() < crossings; ++i) {
    Diagram d = random_diagram(rng, crossings, 2);
    if (d.crossing_count() > best.crossing_count()) best = std::move(d);
  }
  return best;
}

void BM_alexander(benchmark::State& state) {
  const Diagram d = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander(d, 1));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_alexander)->Arg(4)->Arg(8)->Arg(12);

void BM_multiplexed_alexander(benchmark::State& state) {
  const Diagram d = multiplex(named("trefoil"), {static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(alexander(d, 1));
}
BENCHMARK(BM_multiplexed_alexander)->Arg(2)->Arg(4);

void BM_hom_count(benchmark::State& state) {
  const auto g = welded_group(named("figure8"));
  const auto table = state.range(0) == 0 ? symmetric_group(3) : symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(g, table));
}
BENCHMARK(BM_hom_count)->Arg(0)->Arg(1);

void BM_hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(17);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.range(-9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_hnf)->Arg(4)->Arg(8)->Arg(16);

void BM_decide(benchmark::State& state) {
  const Diagram a = sample(10), b = sample(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_vn(a, b, 3));
    benchmark::DoNotOptimize(decide_vn_uc(a, b, 4));
  }
}
BENCHMARK(BM_decide);

void BM_scramble(benchmark::State& state) {
  const auto kinds = parse_move_list("r1,r2,r3,oc,uc,v^n:3");
  const Diagram d = named("figure8");
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(scramble(d, kinds, static_cast<int>(state.range(0)), ++seed));
}
BENCHMARK(BM_scramble)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
