/*
 * Copyright 2026 The coalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <string>

#include "coalg/barr.hh"
#include "coalg/bisim.hh"
#include "coalg/random_instances.hh"

using namespace coalg;

namespace {

// Sparse system on exactly n states with out-degree about `degree`.
TransitionSystem sparse_system(std::size_t n, std::size_t degree, std::uint64_t seed) {
    InstanceRng rng(seed);
    TransitionSystem ts;
    for (std::size_t i = 0; i < n; ++i) {
        ts.add_state("s" + std::to_string(i));
    }
    for (StateId s = 0; s < n; ++s) {
        for (std::size_t k = 0; k < degree; ++k) {
            ts.add_edge(s, static_cast<StateId>(rng.below(n)));
        }
    }
    return ts;
}

template <Relation (*Step)(const TransitionSystem&, const Relation&)>
void BM_PhiStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TransitionSystem ts = sparse_system(n, 4, 7);
    InstanceRng rng(3);
    const Relation r = random_relation(rng, n, 3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Step(ts, r));
    }
    state.SetComplexityN(state.range(0));
}

template <HarnessReport (*Harness)(std::uint64_t, std::size_t, std::size_t)>
void BM_Harness(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Harness(42, count, 8));
    }
}

} // namespace

BENCHMARK(BM_PhiStep<phi_step_serial>)->Name("phi_step/serial")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_PhiStep<phi_step>)->Name("phi_step/omp")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_Harness<barr_vs_bisim_harness_serial>)->Name("harness/serial")->Arg(200)->Arg(1000);
BENCHMARK(BM_Harness<barr_vs_bisim_harness>)->Name("harness/omp")->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
