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

#ifndef INFOFLOW_EXPERIMENT_HPP
#define INFOFLOW_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "infoflow/config.hpp"
#include "infoflow/geometry.hpp"

namespace infoflow {

/// Integer observables of one circuit realization at each recorded layer.
/// Vectors for observables that were not requested stay empty.
struct SampleRecords {
    std::vector<std::size_t> layers;
    std::vector<int> holevo;
    std::vector<int> coherent;
    std::vector<int> private_info;
    std::size_t source_size = 0;
    /// Records where H^M - H^E disagreed with the coherent information.
    std::size_t private_mismatches = 0;

    const std::vector<int>& values(Observable o) const;
};

std::uint64_t sample_seed(const SweepConfig& config, std::size_t n, std::uint64_t sample_index);

/// Geometry of one sample: fixed sets for consecutive/explicit layouts, a fresh
/// per-sample draw for random selection.
Geometry sample_geometry(const SweepConfig& config, std::size_t n, std::uint64_t sample_index);

/// Evolves the pure reference and the mixed-source state in lockstep through
/// one seeded brick-wall circuit and records every requested observable on the
/// config's record grid. Deterministic in (config, n, sample_index).
SampleRecords run_sample(const SweepConfig& config, std::size_t n, std::uint64_t sample_index);

/// Exact integer sums over samples, per recorded layer.
struct SeriesAccumulator {
    std::vector<std::int64_t> sum;
    std::vector<std::int64_t> sum_sq;
    std::int64_t count = 0;

    explicit SeriesAccumulator(std::size_t records = 0) : sum(records, 0), sum_sq(records, 0) {}
    void add(std::span<const int> values);
    void merge(const SeriesAccumulator& other);
    bool operator==(const SeriesAccumulator&) const = default;
};

/// Aggregated statistics of one normalized observable for one N.
struct TimeSeries {
    std::string observable;
    std::size_t n = 0;
    GeometrySpec geometry;
    std::string selection;
    std::vector<std::size_t> layers;
    std::vector<double> tau;
    std::vector<double> mean;
    std::vector<double> variance;
    std::vector<double> std_error;
    std::int64_t n_samples = 0;
    std::vector<std::int64_t> sum;
    std::vector<std::int64_t> sum_sq;
};

/// mean = sum/(n N); variance = (sum_sq - sum^2/n)/((n-1) N^2), evaluated in
/// integers before the final division. Throws if fewer than two samples.
TimeSeries aggregate(std::string observable, std::size_t n, const GeometrySpec& geometry, std::string selection,
                     std::span<const std::size_t> layers, const SeriesAccumulator& acc);

struct SweepResult {
    SweepConfig config;
    std::vector<TimeSeries> series;
    std::size_t private_mismatches = 0;

    const TimeSeries* find(std::string_view observable, std::size_t n) const;
};

/// Runs every (N, sample) pair in order on the calling thread. Reference
/// implementation for the parallel sweep.
SweepResult run_sweep_serial(const SweepConfig& config);

/// Sample-parallel sweep over an OpenMP team of `threads` workers (0 = runtime
/// default). Integer reduction makes the result identical to run_sweep_serial.
SweepResult run_sweep(const SweepConfig& config, int threads = 0);

namespace detail {

struct SweepAccumulators {
    // [n index][observable index]
    std::vector<std::vector<SeriesAccumulator>> per_n;
    std::size_t private_mismatches = 0;

    void add(std::size_t n_index, const SweepConfig& config, const SampleRecords& rec);
    void merge(const SweepAccumulators& other);
};

SweepAccumulators make_accumulators(const SweepConfig& config);
SweepResult finish_sweep(const SweepConfig& config, const SweepAccumulators& acc);

}  // namespace detail

}  // namespace infoflow

#endif
