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

#ifndef INFOFLOW_GEOMETRY_HPP
#define INFOFLOW_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "infoflow/qubit_set.hpp"
#include "infoflow/rng.hpp"

namespace infoflow {

enum class Selection { consecutive, random_qubits };

/// Source/measurement layout in sixteenths of the ring.
///
/// The measurement subsystem M occupies [0, m16*N/16). With consecutive source
/// selection, the right edge of S sits `l16` sixteenths to the left of the
/// right edge of M; negative `l16` pushes S across that boundary (-s16/2 is
/// half-in, -s16 is adjacent outside). Random selection draws the set
/// uniformly per sample instead, keeping its size.
struct GeometrySpec {
    int s16 = 2;
    int m16 = 6;
    int l16 = 2;
    Selection source_selection = Selection::consecutive;
    Selection measure_selection = Selection::consecutive;

    /// "consecutive", "random_source", "random_measure" or "random_both".
    std::string selection_label() const;
    std::string descriptor() const;
    std::uint64_t id() const;
    /// Throws std::invalid_argument if sizes are outside [0,16] or S does not fit.
    void validate() const;
    /// Minimal ring distance between S and the boundary of M in sixteenths
    /// (0 for straddling sets); nullopt when either set is random.
    std::optional<int> min_distance16() const;
    bool operator==(const GeometrySpec&) const = default;
};

Selection parse_selection_label(std::string_view label, Selection* measure);

struct Geometry {
    QubitSet source;
    QubitSet measure;
    QubitSet environment;

    static Geometry from_sets(QubitSet source, QubitSet measure);

    std::size_t n_qubits() const { return measure.n_qubits(); }
    double s() const { return static_cast<double>(source.size()) / static_cast<double>(n_qubits()); }
    double m() const { return static_cast<double>(measure.size()) / static_cast<double>(n_qubits()); }
};

/// Resolves sixteenths to explicit sets for `n` qubits (n a multiple of 16).
/// `coins` is required when either selection is random.
Geometry resolve_geometry(const GeometrySpec& spec, std::size_t n, CoinStream* coins);

/// Uniformly random subset of `size` qubits.
QubitSet random_subset(std::size_t n, std::size_t size, CoinStream& coins);

}  // namespace infoflow

#endif
