#include <benchmark/benchmark.h>

#include "forcelab/extension.hpp"
#include "forcelab/names.hpp"
#include "forcelab/random.hpp"

using namespace forcelab;

static void BM_VStage(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(v_stage(k));
}
BENCHMARK(BM_VStage)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

// Every name of V_5 under one generic filter of the v-shape notion.
static void BM_ValOverV5(benchmark::State& state) {
  const ForcingNotion notion = preset_notion("v-shape");
  const auto v5 = v_stage(5);
  const ConditionSet g = generic_filters(notion)[0].members();
  for (auto _ : state) {
    Valuator val(notion, g);
    for (const auto& tau : v5) benchmark::DoNotOptimize(val(tau));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * v5.size()));
}
BENCHMARK(BM_ValOverV5)->Unit(benchmark::kMillisecond);

static void BM_BuildExtension(benchmark::State& state) {
  const ForcingNotion notion = preset_notion("diamond");
  const Model ground = Model::stage(static_cast<std::size_t>(state.range(0)));
  const GFilter g = generic_filters(notion)[0];
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(NameContext(ground, notion, g)).universe().size());
}
BENCHMARK(BM_BuildExtension)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

// Random closed-ish formulas of depth ≤ 4 with two parameters over V_4.
static void BM_Sats(benchmark::State& state) {
  const Model m = Model::stage(4);
  Rng rng(derive_seed(1, 0));
  std::vector<Formula> formulas;
  std::vector<Env> envs;
  for (int i = 0; i < 64; ++i) {
    formulas.push_back(random_formula(rng, 4, 2));
    envs.push_back({m.universe()[rng.below(m.size())], m.universe()[rng.below(m.size())]});
  }
  for (auto _ : state) {
    for (std::size_t i = 0; i < formulas.size(); ++i) benchmark::DoNotOptimize(sats(m, formulas[i], envs[i]));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * formulas.size()));
}
BENCHMARK(BM_Sats)->Unit(benchmark::kMicrosecond);

static void BM_Forces(benchmark::State& state) {
  const ForcingNotion notion = preset_notion("antichain-4-with-top");
  const Model ground = Model::stage(4);
  const Formula phi = parse_formula("All (Nand (Mem 0 1) (Mem 0 2))");
  const auto u = ground.universe();
  for (auto _ : state) {
    const ForcingRelation rel(ground, notion);
    for (const auto& a : u) {
      const HSet names[] = {a, u.back()};
      benchmark::DoNotOptimize(rel.forces(notion.top(), phi, names));
    }
  }
}
BENCHMARK(BM_Forces)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
