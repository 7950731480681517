// Copyright 2026 The InfoFlow Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "infoflow/analysis.hpp"
#include "infoflow/config.hpp"
#include "infoflow/experiment.hpp"
#include "infoflow/tableau.hpp"

namespace {

using namespace infoflow;

SweepConfig bench_config(std::size_t n) {
    return parse_sweep_config("n_values = [" + std::to_string(n) +
                              "]\ns16 = 2\nm16 = 6\nl16 = 2\nmax_tau = 1\nn_samples = 32\nmaster_seed = 9\n");
}

void BM_SweepSerial(benchmark::State& state) {
    const SweepConfig c = bench_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep_serial(c));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.n_samples));
}

void BM_SweepOmp(benchmark::State& state) {
    const SweepConfig c = bench_config(static_cast<std::size_t>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(c, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.n_samples));
}

std::vector<analysis::ScalingCurve> synthetic_family() {
    std::vector<analysis::ScalingCurve> out;
    for (std::size_t n : {128, 192, 256, 320}) {
        analysis::ScalingCurve c{n, {}, {}};
        for (std::size_t k = 0; k <= n; k++) {
            const double t = 0.5 + static_cast<double>(k) / static_cast<double>(n);
            const double x = (t - 1.0) * std::pow(static_cast<double>(n), 0.8);
            c.tau.push_back(t);
            c.value.push_back(std::tanh(x / 4.0) + 0.01 * std::sin(37.0 * t));
        }
        out.push_back(std::move(c));
    }
    return out;
}

analysis::CollapseSearch bench_search() {
    analysis::CollapseSearch s;
    s.tau_lo = 0.9;
    s.tau_hi = 1.1;
    s.tau_step = 0.005;
    s.half_window = 0.1;
    return s;
}

void BM_CollapseSerial(benchmark::State& state) {
    const auto fam = synthetic_family();
    const auto s = bench_search();
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::optimize_collapse_serial(fam, s));
    }
}

void BM_CollapseOmp(benchmark::State& state) {
    const auto fam = synthetic_family();
    const auto s = bench_search();
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::optimize_collapse(fam, s, threads));
    }
}

void BM_SubsystemEntropy(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    StabilizerState st = StabilizerState::basis_state(n);
    for (std::size_t q = 0; q + 1 < n; q += 2) {
        st.apply_hadamard(q);
        st.apply_cnot(q, q + 1);
    }
    const QubitSet half = QubitSet::ring_interval(n, static_cast<long long>(n / 4), n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(st.subsystem_entropy(half));
    }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOmp)->Args({128, 1})->Args({128, 4})->Args({256, 1})->Args({256, 4})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollapseSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollapseOmp)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsystemEntropy)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
