#include <benchmark/benchmark.h>

#include "sqdepth/instances.hpp"
#include "sqdepth/sdepth.hpp"

namespace {

std::vector<sqdepth::Poset> random_posets(int n, std::size_t count) {
  sqdepth::InstanceGenConfig cfg;
  cfg.n = n;
  cfg.seed = 7;
  cfg.i_max_degree = 2;
  cfg.j_max_degree = std::min(n, 4);
  cfg.density = {0.0, 0.3, 0.3, 0.2, 0.2};
  std::vector<sqdepth::Poset> out;
  for (const auto& ip : sqdepth::generate_instances(cfg, count)) out.emplace_back(ip);
  return out;
}

void BM_Sdepth(benchmark::State& state) {
  const auto posets = random_posets(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqdepth::sdepth(posets[i++ % posets.size()]).value);
  }
}
BENCHMARK(BM_Sdepth)->DenseRange(4, 7);

void BM_NaiveSdepth(benchmark::State& state) {
  std::vector<sqdepth::Poset> small;
  for (auto& p : random_posets(4, 256)) {
    if (p.size() <= 12) small.push_back(std::move(p));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqdepth::naive_sdepth(small[i++ % small.size()]));
  }
}
BENCHMARK(BM_NaiveSdepth);

}  // namespace
