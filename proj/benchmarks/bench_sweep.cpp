#include <benchmark/benchmark.h>

#include "sqdepth/instances.hpp"
#include "sqdepth/sweep.hpp"

namespace {

void BM_Thm110Sweep(benchmark::State& state) {
  sqdepth::InstanceGenConfig cfg;
  cfg.n = 5;
  cfg.seed = 3;
  cfg.shape = sqdepth::InstanceShape::kThm110;
  cfg.density = {0.0, 0.0, 0.4, 0.3};
  const auto instances = sqdepth::generate_instances(cfg, 100);
  sqdepth::SweepOptions opts;
  opts.workers = 1;
  for (auto _ : state) {
    auto result = sqdepth::run_sweep(instances, sqdepth::all_claims(), opts);
    benchmark::DoNotOptimize(result.total_violations());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(instances.size()));
}
BENCHMARK(BM_Thm110Sweep)->Unit(benchmark::kMillisecond);

}  // namespace
