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

#ifndef INFOFLOW_CONFIG_HPP
#define INFOFLOW_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infoflow/circuit.hpp"
#include "infoflow/geometry.hpp"

namespace infoflow {

/// Malformed or inconsistent sweep configuration.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational parse(std::string_view text);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// floor(value * n) in exact arithmetic.
    std::size_t floor_times(std::size_t n) const;
    std::string to_string() const;
    bool operator==(const Rational&) const = default;
};

enum class Observable { holevo, coherent, private_check };

std::string_view to_string(Observable o);
Observable parse_observable(std::string_view s);
/// Series id written to result files: "holevo", "coherent" or "private".
std::string_view series_id(Observable o);

struct SweepConfig {
    std::vector<std::size_t> n_values;
    GeometrySpec geometry;
    /// Explicit sets replace the sixteenths layout; only valid with a single N.
    std::optional<std::vector<std::size_t>> source_qubits;
    std::optional<std::vector<std::size_t>> measure_qubits;
    std::vector<Observable> observables{Observable::holevo};
    Rational max_tau{1, 1};
    /// nullopt selects the default stride: 1 for N <= 128, else N/128.
    std::optional<std::size_t> record_stride;
    std::size_t n_samples = 100;
    std::uint64_t master_seed = 1;
    CnotOrientation cnot_orientation = CnotOrientation::random;
    LayerConvention layer_convention = LayerConvention::single_row;

    /// Throws ConfigError.
    void validate() const;
    bool has(Observable o) const;
    bool explicit_sets() const { return source_qubits.has_value(); }
    std::size_t stride_for(std::size_t n) const;
    /// Recorded layer counts: 0, stride, 2*stride, ... plus the final layer floor(max_tau*N).
    std::vector<std::size_t> record_layers(std::size_t n) const;
    std::size_t max_layers(std::size_t n) const { return max_tau.floor_times(n); }
    std::uint64_t geometry_id() const;
    std::string selection_label() const;

    /// Canonical key/value text; parse_sweep_config(to_text()) reproduces the config.
    std::string to_text() const;
    std::uint64_t hash() const;
};

/// Parses the flat `key = value` format. Everything after '#' is a comment,
/// arrays are written `[a, b, c]`. Unknown or repeated keys are errors.
/// `overrides` are extra `key=value` strings applied on top of the text.
SweepConfig parse_sweep_config(std::string_view text, std::span<const std::string> overrides = {});
SweepConfig load_sweep_config(const std::filesystem::path& path, std::span<const std::string> overrides = {});

}  // namespace infoflow

#endif
