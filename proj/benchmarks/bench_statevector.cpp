// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the statevector kernel and both verification paths
// (simulated circuit vs. closed form vs. classical path enumeration).
#include <benchmark/benchmark.h>

#include <random>

#include "qmarkov/chain.hpp"
#include "qmarkov/gates.hpp"
#include "qmarkov/markov.hpp"
#include "qmarkov/statevector.hpp"

using namespace qmarkov;

namespace {

ChainSpec make_spec(std::size_t length) {
  std::mt19937_64 rng(1234);
  ChainSpec spec;
  spec.length = length;
  for (std::size_t i = 0; i < length; ++i) {
    spec.init_exponents.push_back(
        -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }
  for (std::size_t i = 0; i + 1 < length; ++i) {
    spec.cond_exponents.push_back(
        -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }
  return spec;
}

void BM_ApplySingle(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  StateVector sv = init_basis(k, 0);
  const GateMatrix gate = root_x(0.5);
  for (auto _ : state) {
    sv = apply_single(sv, gate, k / 2);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(1) << k);
}

void BM_ApplyControlled(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  StateVector sv = apply_single(init_basis(k, 0), root_x(0.5), 0);
  const GateMatrix gate = root_x(0.25);
  for (auto _ : state) {
    sv = apply_controlled(sv, gate, 0, k - 1);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(1) << k);
}

void BM_RunChain(benchmark::State& state) {
  const ChainSpec spec = make_spec(static_cast<std::size_t>(state.range(0)));
  const Circuit circuit = compile_chain(spec);
  const StateVector initial = init_basis(spec.length, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_circuit(circuit, initial).amplitudes().data());
  }
}

void BM_ClosedFormState(benchmark::State& state) {
  const ChainSpec spec = make_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_state(spec).amplitudes().data());
  }
}

void BM_PathDistribution(benchmark::State& state) {
  const ChainSpec spec = make_spec(static_cast<std::size_t>(state.range(0)));
  const DerivedDtmc dtmc = chain_to_dtmc(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        path_distribution(dtmc.initial, dtmc.transitions).probs().data());
  }
}

}  // namespace

BENCHMARK(BM_ApplySingle)->DenseRange(10, 22, 4);
BENCHMARK(BM_ApplyControlled)->DenseRange(10, 22, 4);
BENCHMARK(BM_RunChain)->Arg(3)->Arg(10)->Arg(20);
BENCHMARK(BM_ClosedFormState)->Arg(3)->Arg(10)->Arg(20);
BENCHMARK(BM_PathDistribution)->Arg(3)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
