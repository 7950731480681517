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

#ifndef INFOFLOW_CIRCUIT_HPP
#define INFOFLOW_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infoflow/qubit_set.hpp"
#include "infoflow/rng.hpp"

namespace infoflow {

enum class CnotOrientation { random, control_left };
/// One layer is one row of bricks covering half the bonds; parity alternates.
enum class LayerConvention { single_row };

std::string_view to_string(CnotOrientation o);
std::string_view to_string(LayerConvention c);
CnotOrientation parse_cnot_orientation(std::string_view s);
LayerConvention parse_layer_convention(std::string_view s);

struct CircuitParams {
    std::size_t n_qubits = 0;
    std::size_t depth = 0;
    std::uint64_t seed = 0;
    CnotOrientation cnot_orientation = CnotOrientation::random;
    LayerConvention layer_convention = LayerConvention::single_row;

    /// Throws std::invalid_argument unless n_qubits is even and positive.
    void validate() const;
};

enum class SingleQubitGate : std::uint8_t { hadamard, phase };

/// CNOT on the bond (a, a+1 mod N) followed by one H or P on each qubit.
struct Brick {
    std::size_t a = 0;
    std::size_t b = 0;
    bool control_is_a = true;
    SingleQubitGate gate_a = SingleQubitGate::hadamard;
    SingleQubitGate gate_b = SingleQubitGate::hadamard;

    std::size_t control() const { return control_is_a ? a : b; }
    std::size_t target() const { return control_is_a ? b : a; }

    bool operator==(const Brick&) const = default;
};

using Layer = std::vector<Brick>;

/// Bricks of layer `layer_index`. Even layers pair (0,1),(2,3),...; odd layers
/// pair (1,2),...,(N-1,0). Per brick, in ascending position, coins are drawn in
/// the order: CNOT direction (skipped for control_left), gate on a, gate on b.
Layer build_layer(const CircuitParams& params, std::size_t layer_index, CoinStream& coins);

/// All `params.depth` layers from a fresh stream seeded with `params.seed`.
std::vector<Layer> build_circuit(const CircuitParams& params);

/// Applies each brick's CNOT and then its two single-qubit gates. Works for any
/// state type exposing apply_cnot/apply_hadamard/apply_phase and n_qubits().
template <typename State>
void apply_layer(State& state, std::span<const Brick> bricks) {
    for (const Brick& br : bricks) {
        if (br.a >= state.n_qubits() || br.b >= state.n_qubits()) {
            throw std::invalid_argument("apply_layer: brick outside the state's qubit range");
        }
        state.apply_cnot(br.control(), br.target());
        if (br.gate_a == SingleQubitGate::hadamard) {
            state.apply_hadamard(br.a);
        } else {
            state.apply_phase(br.a);
        }
        if (br.gate_b == SingleQubitGate::hadamard) {
            state.apply_hadamard(br.b);
        } else {
            state.apply_phase(br.b);
        }
    }
}

template <typename State>
void apply_circuit(State& state, std::span<const Layer> layers) {
    for (const Layer& layer : layers) {
        apply_layer(state, layer);
    }
}

/// Qubits causally reachable from `source` after `layers` brick rows starting
/// from layer 0: every brick touching the set absorbs both of its qubits.
QubitSet lightcone_bound(const QubitSet& source, std::size_t layers, std::size_t n_qubits);

/// First layer count t at which lightcone_bound(source, t) leaves `region`, or
/// nullopt-equivalent `max_layers + 1` if it stays inside for all t <= max_layers.
std::size_t first_lightcone_exit(const QubitSet& source, const QubitSet& region, std::size_t max_layers);

}  // namespace infoflow

#endif
