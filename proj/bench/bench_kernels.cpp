// Copyright 2026 The dwall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "dwall/mixers.hpp"
#include "dwall/pauli.hpp"
#include "dwall/problems.hpp"
#include "dwall/rng.hpp"

namespace {

using namespace dwall;

IsingModel scheduling_model(int events) {
    return build_scheduling(gen_scheduling(events, 7), EncodingKind::DomainWall).model;
}

IsingModel random_model(int n) {
    SplitMix64 rng(11);
    IsingModel m(n);
    for (int i = 0; i < n; ++i) {
        m.add_field(i, rng.uniform() - 0.5);
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < 0.3) m.add_coupler(i, j, rng.uniform() - 0.5);
    }
    return m;
}

PauliOperatorSum mixer(int m) {
    VariableHandle v;
    v.m = m;
    return build_mixer(v);
}

void BM_BruteForceParallel(benchmark::State& state) {
    const IsingModel m = random_model(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force(m));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_BruteForceSerial(benchmark::State& state) {
    const IsingModel m = random_model(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force(m));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_BruteForceSchedulingParallel(benchmark::State& state) {
    const IsingModel m = scheduling_model(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force(m));
}

void BM_BruteForceSchedulingSerial(benchmark::State& state) {
    const IsingModel m = scheduling_model(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force(m));
}

void BM_ToDenseParallel(benchmark::State& state) {
    const PauliOperatorSum op = mixer(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(to_dense(op));
}

void BM_ToDenseSerial(benchmark::State& state) {
    const PauliOperatorSum op = mixer(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::to_dense(op));
}

void BM_MultiplyParallel(benchmark::State& state) {
    const DenseOperator a = to_dense(mixer(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, a));
}

void BM_MultiplySerial(benchmark::State& state) {
    const DenseOperator a = to_dense(mixer(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(serial::multiply(a, a));
}

}  // namespace

BENCHMARK(BM_BruteForceParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSchedulingParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceSchedulingSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToDenseParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToDenseSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplySerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
