#include <benchmark/benchmark.h>

#include "thermcap/bounds.hpp"
#include "thermcap/gfunc.hpp"

namespace {

void BM_G(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermcap::gfunc::g(x));
    x = x < 1e6 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_G);

void BM_Delta(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermcap::gfunc::delta(2.5, x));
    x = x < 1e6 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_Delta);

void BM_Report(benchmark::State& state) {
  const thermcap::ChannelParams params(0.5, 1.0);
  double n = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermcap::bounds::report(params, n));
    n = n < 100.0 ? n * 1.3 : 0.1;
  }
}
BENCHMARK(BM_Report);

}  // namespace
