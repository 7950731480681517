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

#include "infoflow/circuit.hpp"

namespace infoflow {

std::string_view to_string(CnotOrientation o) {
    return o == CnotOrientation::random ? "random" : "control_left";
}

std::string_view to_string(LayerConvention) { return "single_row"; }

CnotOrientation parse_cnot_orientation(std::string_view s) {
    if (s == "random") {
        return CnotOrientation::random;
    }
    if (s == "control_left") {
        return CnotOrientation::control_left;
    }
    throw std::invalid_argument("unknown cnot_orientation '" + std::string(s) + "'");
}

LayerConvention parse_layer_convention(std::string_view s) {
    if (s == "single_row") {
        return LayerConvention::single_row;
    }
    throw std::invalid_argument("unknown layer_convention '" + std::string(s) + "'");
}

void CircuitParams::validate() const {
    if (n_qubits == 0 || n_qubits % 2 != 0) {
        throw std::invalid_argument("circuit needs an even, positive qubit count (got " + std::to_string(n_qubits) +
                                    ")");
    }
}

Layer build_layer(const CircuitParams& params, std::size_t layer_index, CoinStream& coins) {
    params.validate();
    const std::size_t n = params.n_qubits;
    Layer layer;
    layer.reserve(n / 2);
    for (std::size_t a = layer_index % 2; a < n; a += 2) {
        Brick br;
        br.a = a;
        br.b = (a + 1) % n;
        br.control_is_a = params.cnot_orientation == CnotOrientation::random ? !coins.flip() : true;
        br.gate_a = coins.flip() ? SingleQubitGate::phase : SingleQubitGate::hadamard;
        br.gate_b = coins.flip() ? SingleQubitGate::phase : SingleQubitGate::hadamard;
        layer.push_back(br);
    }
    return layer;
}

std::vector<Layer> build_circuit(const CircuitParams& params) {
    params.validate();
    CoinStream coins(params.seed);
    std::vector<Layer> layers;
    layers.reserve(params.depth);
    for (std::size_t t = 0; t < params.depth; t++) {
        layers.push_back(build_layer(params, t, coins));
    }
    return layers;
}

namespace {

void grow_one_layer(std::vector<bool>& in, std::size_t layer_index) {
    const std::size_t n = in.size();
    for (std::size_t a = layer_index % 2; a < n; a += 2) {
        std::size_t b = (a + 1) % n;
        if (in[a] || in[b]) {
            in[a] = true;
            in[b] = true;
        }
    }
}

}  // namespace

QubitSet lightcone_bound(const QubitSet& source, std::size_t layers, std::size_t n_qubits) {
    if (source.n_qubits() != n_qubits) {
        throw std::invalid_argument("lightcone_bound: source built for a different qubit count");
    }
    std::vector<bool> in = source.mask();
    for (std::size_t t = 0; t < layers; t++) {
        grow_one_layer(in, t);
    }
    std::vector<std::size_t> members;
    for (std::size_t q = 0; q < n_qubits; q++) {
        if (in[q]) {
            members.push_back(q);
        }
    }
    return QubitSet(n_qubits, std::move(members));
}

std::size_t first_lightcone_exit(const QubitSet& source, const QubitSet& region, std::size_t max_layers) {
    std::vector<bool> in = source.mask();
    std::vector<bool> allowed = region.mask();
    for (std::size_t t = 0; t <= max_layers; t++) {
        for (std::size_t q = 0; q < in.size(); q++) {
            if (in[q] && !allowed[q]) {
                return t;
            }
        }
        if (t < max_layers) {
            grow_one_layer(in, t);
        }
    }
    return max_layers + 1;
}

}  // namespace infoflow
