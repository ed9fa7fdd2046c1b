#include <benchmark/benchmark.h>

#include "sqdepth/instances.hpp"
#include "sqdepth/koszul.hpp"

namespace {

void BM_Depth(benchmark::State& state) {
  sqdepth::InstanceGenConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.seed = 11;
  cfg.i_max_degree = 2;
  cfg.j_max_degree = 3;
  cfg.density = {0.0, 0.3, 0.3, 0.3};
  const auto instances = sqdepth::generate_instances(cfg, 32);
  const auto field = state.range(1) == 0 ? sqdepth::FieldSpec::rationals()
                                         : sqdepth::FieldSpec::prime(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqdepth::depth(instances[i++ % instances.size()], field).value);
  }
}
BENCHMARK(BM_Depth)->ArgsProduct({{4, 5, 6, 7, 8}, {0, 1}});

}  // namespace
