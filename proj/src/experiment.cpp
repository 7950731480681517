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

#include "infoflow/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "infoflow/circuit.hpp"
#include "infoflow/measures.hpp"
#include "infoflow/rng.hpp"
#include "infoflow/tableau.hpp"

namespace infoflow {

const std::vector<int>& SampleRecords::values(Observable o) const {
    switch (o) {
        case Observable::holevo:
            return holevo;
        case Observable::coherent:
            return coherent;
        case Observable::private_check:
            return private_info;
    }
    throw std::logic_error("unreachable observable");
}

std::uint64_t sample_seed(const SweepConfig& config, std::size_t n, std::uint64_t sample_index) {
    return derive_seed({config.master_seed, static_cast<std::uint64_t>(n), config.geometry_id(), sample_index});
}

Geometry sample_geometry(const SweepConfig& config, std::size_t n, std::uint64_t sample_index) {
    if (config.explicit_sets()) {
        return Geometry::from_sets(QubitSet(n, *config.source_qubits), QubitSet(n, *config.measure_qubits));
    }
    CoinStream coins(derive_seed({sample_seed(config, n, sample_index), 0x67656f6dULL}));
    return resolve_geometry(config.geometry, n, &coins);
}

SampleRecords run_sample(const SweepConfig& config, std::size_t n, std::uint64_t sample_index) {
    const Geometry geo = sample_geometry(config, n, sample_index);
    CircuitParams params{n, config.max_layers(n), sample_seed(config, n, sample_index), config.cnot_orientation,
                         config.layer_convention};
    params.validate();
    CoinStream coins(params.seed);

    const bool want_h = config.has(Observable::holevo);
    const bool want_c = config.has(Observable::coherent);
    const bool want_p = config.has(Observable::private_check);

    SampleRecords rec;
    rec.layers = config.record_layers(n);
    rec.source_size = geo.source.size();
    StabilizerState pure = StabilizerState::basis_state(n);
    StabilizerState mixed = StabilizerState::mixed_source(n, geo.source);

    auto record = [&]() {
        EntropyTriple e = measure_entropies(pure, mixed, geo.measure, geo.environment, want_c || want_p);
        if (want_h) {
            rec.holevo.push_back(e.holevo_measure());
        }
        if (want_c) {
            rec.coherent.push_back(e.coherent());
        }
        if (want_p) {
            int p = private_info_bits(pure, mixed, geo.measure);
            rec.private_info.push_back(p);
            if (p != e.coherent()) {
                rec.private_mismatches++;
            }
        }
    };

    std::size_t next = 0;
    for (std::size_t t = 0; next < rec.layers.size(); t++) {
        if (t == rec.layers[next]) {
            record();
            next++;
            if (next == rec.layers.size()) {
                break;
            }
        }
        Layer layer = build_layer(params, t, coins);
        apply_layer(pure, std::span<const Brick>(layer));
        apply_layer(mixed, std::span<const Brick>(layer));
    }
    return rec;
}

void SeriesAccumulator::add(std::span<const int> values) {
    if (values.size() != sum.size()) {
        throw std::invalid_argument("SeriesAccumulator::add: record length mismatch");
    }
    for (std::size_t i = 0; i < values.size(); i++) {
        sum[i] += values[i];
        sum_sq[i] += static_cast<std::int64_t>(values[i]) * values[i];
    }
    count++;
}

void SeriesAccumulator::merge(const SeriesAccumulator& other) {
    if (other.sum.size() != sum.size()) {
        throw std::invalid_argument("SeriesAccumulator::merge: record length mismatch");
    }
    for (std::size_t i = 0; i < sum.size(); i++) {
        sum[i] += other.sum[i];
        sum_sq[i] += other.sum_sq[i];
    }
    count += other.count;
}

TimeSeries aggregate(std::string observable, std::size_t n, const GeometrySpec& geometry, std::string selection,
                     std::span<const std::size_t> layers, const SeriesAccumulator& acc) {
    if (acc.count < 2) {
        throw std::invalid_argument("aggregate: variance needs at least two samples");
    }
    if (layers.size() != acc.sum.size()) {
        throw std::invalid_argument("aggregate: layer grid does not match the accumulator");
    }
    TimeSeries ts;
    ts.observable = std::move(observable);
    ts.n = n;
    ts.geometry = geometry;
    ts.selection = std::move(selection);
    ts.layers.assign(layers.begin(), layers.end());
    ts.n_samples = acc.count;
    ts.sum = acc.sum;
    ts.sum_sq = acc.sum_sq;
    const double nn = static_cast<double>(n);
    const __int128 cnt = acc.count;
    for (std::size_t i = 0; i < layers.size(); i++) {
        ts.tau.push_back(static_cast<double>(layers[i]) / nn);
        ts.mean.push_back(static_cast<double>(acc.sum[i]) / (static_cast<double>(acc.count) * nn));
        // n * sum_sq - sum^2 is exact in 128 bits and never negative.
        __int128 centered = cnt * acc.sum_sq[i] - static_cast<__int128>(acc.sum[i]) * acc.sum[i];
        double var = static_cast<double>(centered) / (static_cast<double>(cnt * (cnt - 1)) * nn * nn);
        ts.variance.push_back(var);
        ts.std_error.push_back(std::sqrt(var / static_cast<double>(acc.count)));
    }
    return ts;
}

const TimeSeries* SweepResult::find(std::string_view observable, std::size_t n) const {
    for (const TimeSeries& ts : series) {
        if (ts.observable == observable && ts.n == n) {
            return &ts;
        }
    }
    return nullptr;
}

namespace detail {

SweepAccumulators make_accumulators(const SweepConfig& config) {
    SweepAccumulators acc;
    for (std::size_t n : config.n_values) {
        std::size_t records = config.record_layers(n).size();
        acc.per_n.emplace_back(config.observables.size(), SeriesAccumulator(records));
    }
    return acc;
}

void SweepAccumulators::add(std::size_t n_index, const SweepConfig& config, const SampleRecords& rec) {
    for (std::size_t k = 0; k < config.observables.size(); k++) {
        per_n[n_index][k].add(rec.values(config.observables[k]));
    }
    private_mismatches += rec.private_mismatches;
}

void SweepAccumulators::merge(const SweepAccumulators& other) {
    for (std::size_t i = 0; i < per_n.size(); i++) {
        for (std::size_t k = 0; k < per_n[i].size(); k++) {
            per_n[i][k].merge(other.per_n[i][k]);
        }
    }
    private_mismatches += other.private_mismatches;
}

SweepResult finish_sweep(const SweepConfig& config, const SweepAccumulators& acc) {
    SweepResult result;
    result.config = config;
    result.private_mismatches = acc.private_mismatches;
    for (std::size_t i = 0; i < config.n_values.size(); i++) {
        const std::size_t n = config.n_values[i];
        auto layers = config.record_layers(n);
        for (std::size_t k = 0; k < config.observables.size(); k++) {
            result.series.push_back(aggregate(std::string(series_id(config.observables[k])), n, config.geometry,
                                              config.selection_label(), layers, acc.per_n[i][k]));
        }
    }
    return result;
}

}  // namespace detail

SweepResult run_sweep_serial(const SweepConfig& config) {
    config.validate();
    detail::SweepAccumulators acc = detail::make_accumulators(config);
    for (std::size_t i = 0; i < config.n_values.size(); i++) {
        for (std::size_t s = 0; s < config.n_samples; s++) {
            acc.add(i, config, run_sample(config, config.n_values[i], s));
        }
    }
    return detail::finish_sweep(config, acc);
}

}  // namespace infoflow
