#include <benchmark/benchmark.h>

#include "thermcap/chi_opt.hpp"
#include "thermcap/fock.hpp"

namespace {

using namespace thermcap;

void BM_ApplyChannel(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const fock::ThermalChannelSimulator sim(ChannelParams(0.6, 0.5), dim);
  const fock::FockDensityMatrix rho = fock::coherent_state({1.0, 0.5}, dim);
  for (auto _ : state) benchmark::DoNotOptimize(sim.apply(rho));
}
BENCHMARK(BM_ApplyChannel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Entropy(benchmark::State& state) {
  const fock::FockDensityMatrix rho = fock::thermal_state(2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fock::von_neumann_entropy(rho));
}
BENCHMARK(BM_Entropy)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_GaussianEnsembleChi(benchmark::State& state) {
  const ChannelParams params(0.6, 0.5);
  const fock::QuadratureGrid grid{12, 12};
  for (auto _ : state) benchmark::DoNotOptimize(fock::holevo_chi_gaussian_ensemble(params, 0.5, grid));
}
BENCHMARK(BM_GaussianEnsembleChi)->Unit(benchmark::kMillisecond);

void BM_EnsembleChi(benchmark::State& state) {
  std::vector<fock::FockDensityMatrix> states;
  std::vector<double> weights;
  const int k = static_cast<int>(state.range(0));
  for (int i = 0; i < k; ++i) {
    states.push_back(chi_opt::member_state({std::polar(1.0, 6.283185307179586 * i / k), 0.1}, 24));
    weights.push_back(1.0 / k);
  }
  const chi_opt::Ensemble ensemble = chi_opt::make_ensemble(std::move(states), std::move(weights));
  for (auto _ : state) benchmark::DoNotOptimize(chi_opt::chi(ChannelParams(0.6, 0.5), ensemble));
}
BENCHMARK(BM_EnsembleChi)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
