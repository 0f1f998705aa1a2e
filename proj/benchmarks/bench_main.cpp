// Copyright 2026 The qsr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "qsr/analysis.hpp"
#include "qsr/cluster.hpp"
#include "qsr/protocol.hpp"
#include "qsr/shares.hpp"
#include "qsr/statevec.hpp"

namespace {

using namespace qsr;

void BM_Hadamard(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Statevector s(n);
    std::size_t q = 0;
    for (auto _ : state) {
        s.apply_1q(Gate::h(), q);
        q = (q + 1) % n;
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_Hadamard)->DenseRange(4, 20, 4);

void BM_ControlledZ(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Statevector s(n);
    for (std::size_t q = 0; q < n; ++q) {
        s.apply_1q(Gate::h(), q);
    }
    for (auto _ : state) {
        s.apply_cz(0, n - 1);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_ControlledZ)->DenseRange(4, 20, 4);

void BM_CanonicalCluster(benchmark::State& state) {
    const auto g = ClusterGraph::path(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_cluster(g));
    }
}
BENCHMARK(BM_CanonicalCluster)->DenseRange(4, 16, 4);

void BM_LazyProtocol(benchmark::State& state) {
    ProtocolInput in;
    in.shares = split_secret(3, static_cast<std::size_t>(state.range(0)), 101, 7);
    in.secret = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    std::uint64_t seed = 0;
    for (auto _ : state) {
        in.seed = seed++;
        benchmark::DoNotOptimize(run_protocol(in));
    }
}
BENCHMARK(BM_LazyProtocol)->RangeMultiplier(4)->Range(2, 128);

void BM_EagerProtocol(benchmark::State& state) {
    ProtocolInput in;
    in.shares = split_secret(3, static_cast<std::size_t>(state.range(0)), 101, 7);
    in.secret = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    in.engine = Engine::Eager;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        in.seed = seed++;
        benchmark::DoNotOptimize(run_protocol(in));
    }
}
BENCHMARK(BM_EagerProtocol)->DenseRange(2, 12, 2);

void BM_Experiment(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(static_cast<std::size_t>(state.range(0)), 1));
    }
}
BENCHMARK(BM_Experiment)->Arg(1000)->Arg(10000);

void BM_SwapTest(benchmark::State& state) {
    const auto a = basis_state(Basis::Z, 0);
    const auto b = basis_state(Basis::X, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(swap_test_p0(a, b, static_cast<std::size_t>(state.range(0)), 2));
    }
}
BENCHMARK(BM_SwapTest)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
