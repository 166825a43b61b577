// Copyright 2026 The nekomata Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "neko/analysis.hpp"
#include "neko/constructions.hpp"
#include "neko/gates.hpp"
#include "neko/statevector.hpp"

using namespace neko;

namespace {

StateVector spread_state(int q) {
  StateVector s(q);
  for (int i = 0; i < q; ++i) apply_single_qubit(s, i, gates::hadamard_matrix());
  return s;
}

void BM_SingleQubit(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  StateVector s = spread_state(q);
  const auto h = gates::hadamard_matrix();
  int wire = 0;
  for (auto _ : state) {
    apply_single_qubit(s, wire, h);
    wire = (wire + 1) % q;
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q));
}
BENCHMARK(BM_SingleQubit)->DenseRange(12, 20, 4);

void BM_FlipPredicate(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  StateVector s = spread_state(q);
  const auto controls = wire_range(0, q - 1);
  const auto pred = BitPredicate::weight_at_least(q - 1, (q - 1) / 2);
  for (auto _ : state) {
    apply_flip_predicate(s, controls, q - 1, pred);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q));
}
BENCHMARK(BM_FlipPredicate)->DenseRange(12, 20, 4);

void BM_Dense(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  StateVector s = spread_state(q);
  const auto g = gates::q_tilde_gate(k, wire_range(q - k, k));
  const auto& u = std::get<DenseGate>(g.kind).matrix;
  for (auto _ : state) {
    apply_dense(s, g.wires, u);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q));
}
BENCHMARK(BM_Dense)->Args({16, 2})->Args({16, 3})->Args({16, 5});

void BM_GridSimulation(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GridParams params{4, ParityRestrictedSet::singleton("1111"), m};
  const Circuit c = build_grid_nekomata(params);
  for (auto _ : state) {
    const StateVector out = run_circuit(c, StateVector(c.qubit_count()));
    benchmark::DoNotOptimize(nekomata_fidelity(out, params.target_wires()));
  }
}
BENCHMARK(BM_GridSimulation)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SymmetricSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slice_symmetric_stats(n, n / 2, compute_m(n, ParityRestrictedSet::hamming_slice(n, n / 2).size_as_double())));
}
BENCHMARK(BM_SymmetricSlice)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_SubsBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(7);
  const auto set = sample_parity_restricted_set(n, std::uint64_t{1} << (n - 2), 0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(subs_complement_basis(set, 2));
}
BENCHMARK(BM_SubsBasis)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
