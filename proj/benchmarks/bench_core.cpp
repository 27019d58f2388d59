#include <benchmark/benchmark.h>

#include "pdel/art_demo.hpp"
#include "pdel/complex_algebra.hpp"
#include "pdel/eval.hpp"
#include "pdel/generators.hpp"
#include "pdel/rewrite.hpp"
#include "pdel/synthesis.hpp"

namespace {

using namespace pdel;

void BM_ArtUpdate(benchmark::State& state) {
  IntKripkeModel M = art_model();
  EventStructureL E = art_event();
  for (auto _ : state) benchmark::DoNotOptimize(int_update(M, E));
}
BENCHMARK(BM_ArtUpdate);

void BM_ClassicalUpdate(benchmark::State& state) {
  Rng rng(1);
  PesModel M = random_pes(rng, 4, 2, 12);
  EventStructureL E = random_classical_event(rng, M, 3);
  EventLibrary lib{{E.name, E}};
  for (auto _ : state) benchmark::DoNotOptimize(classical_update(M, lib, E));
}
BENCHMARK(BM_ClassicalUpdate);

void BM_DualityCheck(benchmark::State& state) {
  Rng rng(2);
  PesModel M = random_pes(rng, 4, 2, 12);
  EventStructureL E = random_classical_event(rng, M, 3);
  EventLibrary lib{{E.name, E}};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_duality(M, lib, E, DualityMode::Update));
}
BENCHMARK(BM_DualityCheck);

void BM_EvalDynamic(benchmark::State& state) {
  Rng rng(3);
  RandomModelOptions opts;
  opts.events = 1;
  ApeModel M = random_ape_model(rng, opts);
  Formula f = random_dynamic_formula(rng, M, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eval_algebraic(M, f));
}
BENCHMARK(BM_EvalDynamic);

void BM_Rewrite(benchmark::State& state) {
  Rng rng(4);
  RandomModelOptions opts;
  opts.events = 1;
  ApeModel M = random_ape_model(rng, opts);
  Formula f = random_dynamic_formula(rng, M, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_static(f, *M.events));
}
BENCHMARK(BM_Rewrite);

void BM_SynthesizeCell(benchmark::State& state) {
  Rng rng(5);
  auto A = random_eha(rng, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    for (int cell : i_minimal(*A, 0)) {
      LinSystem sys = build_system(*A, 0, cell, {});
      benchmark::DoNotOptimize(strictify(*A, sys));
    }
  }
}
BENCHMARK(BM_SynthesizeCell)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
