// Serial vs parallel timings for the three data-parallel kernels.

#include <benchmark/benchmark.h>

#include "lowrank/certify.hpp"
#include "lowrank/io.hpp"
#include "lowrank/projections.hpp"
#include "lowrank/random.hpp"

using namespace lowrank;

namespace {

const MeasurementEnsemble& fixture_ensemble() {
  static const MeasurementEnsemble e =
      ensemble_from_json(parse_json(read_text_file(data_dir() / "thm33_ensemble.json")));
  return e;
}

const SubspaceFile& fixture_subspaces() {
  static const SubspaceFile f = subspaces_from_json(parse_json(read_text_file(data_dir() / "thm43_subspaces.json")));
  return f;
}

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void BM_SliceChecks(benchmark::State& state) {
  const MeasurementEnsemble e = projection_ensemble(fixture_subspaces().subspaces, fixture_subspaces().n);
  CertifyConfig cfg;
  cfg.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(slice_checks(e, {"x34", "x44"}, cfg));
}

void BM_KernelHits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_kernel_hits(fixture_ensemble(), 1000, 1, mode(state)));
}

void BM_ComplementProperty(benchmark::State& state) {
  StreamRng rng(5, 0);
  std::vector<RationalVector> vs(16, RationalVector(6));
  for (auto& v : vs) {
    for (auto& x : v) x = static_cast<long>(rng.uniform(-3, 3));
  }
  ComplementOptions opt;
  opt.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(complement_property(vs, opt));
}

}  // namespace

BENCHMARK(BM_SliceChecks)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelHits)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplementProperty)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
