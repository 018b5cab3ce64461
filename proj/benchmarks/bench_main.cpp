#include <benchmark/benchmark.h>

#include "qswitch/capacity.hpp"
#include "qswitch/correctability.hpp"
#include "qswitch/ebcert.hpp"
#include "qswitch/sampling.hpp"
#include "qswitch/switch.hpp"

namespace {

using namespace qswitch;

PauliVector xy_vector() { return PauliVector({0, 0.5, 0.5, 0}); }

void BM_switch_channel_pauli(benchmark::State& state) {
  const Channel xy = pauli_channel(xy_vector());
  const ControlState omega = ControlState::plus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(switch_channel(xy, xy, omega));
  }
}
BENCHMARK(BM_switch_channel_pauli);

void BM_kraus_to_choi_switched(benchmark::State& state) {
  const Channel xy = pauli_channel(xy_vector());
  const SwitchedChannel sw = switch_channel(xy, xy, ControlState::plus());
  for (auto _ : state) {
    benchmark::DoNotOptimize(kraus_to_choi(sw.base, false));
  }
}
BENCHMARK(BM_kraus_to_choi_switched);

void BM_switched_kl_check(benchmark::State& state) {
  Rng rng(7);
  const Channel ch = random_channel(2, static_cast<int>(state.range(0)), rng);
  Vector gamma(2);
  gamma << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(switched_kl_check(ch, gamma));
  }
}
BENCHMARK(BM_switched_kl_check)->Arg(2)->Arg(4);

void BM_classify_pair(benchmark::State& state) {
  const Channel ch = pauli_channel(PauliVector({0, 0.3, 0.7, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(ch));
  }
}
BENCHMARK(BM_classify_pair);

void BM_one_shot_coherent_info(benchmark::State& state) {
  const Channel xy = pauli_channel(xy_vector());
  const SwitchedChannel sw = switch_channel(xy, xy, ControlState::plus());
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = static_cast<int>(state.range(0));
  cfg.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(one_shot_coherent_info(sw.base, cfg));
  }
}
BENCHMARK(BM_one_shot_coherent_info)->Arg(10)->Arg(40);

void BM_certify_erasure_pair(benchmark::State& state) {
  Rng rng(13);
  const ErasurePair pair = random_erasure_pair(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_entanglement_breaking(pair));
  }
}
BENCHMARK(BM_certify_erasure_pair)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
