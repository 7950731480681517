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

#include "infoflow/measures.hpp"

#include <stdexcept>

namespace infoflow {

namespace {

void check_pair(const StabilizerState& pure, const StabilizerState& mixed) {
    if (pure.n_qubits() != mixed.n_qubits()) {
        throw std::invalid_argument("measures: pure and mixed states differ in qubit count");
    }
    if (!pure.is_pure()) {
        throw std::invalid_argument("measures: reference state is not pure");
    }
}

}  // namespace

int holevo_bits(const StabilizerState& pure, const StabilizerState& mixed, const QubitSet& a) {
    check_pair(pure, mixed);
    return mixed.subsystem_entropy(a) - pure.subsystem_entropy(a);
}

int coherent_bits(const StabilizerState& mixed, const QubitSet& measure) {
    return mixed.subsystem_entropy(measure) - mixed.subsystem_entropy(measure.complement());
}

int private_info_bits(const StabilizerState& pure, const StabilizerState& mixed, const QubitSet& measure) {
    check_pair(pure, mixed);
    QubitSet env = measure.complement();
    int h_m = mixed.subsystem_entropy_direct(measure) - pure.subsystem_entropy_direct(measure);
    int h_e = mixed.subsystem_entropy_direct(env) - pure.subsystem_entropy_direct(env);
    return h_m - h_e;
}

EntropyTriple measure_entropies(const StabilizerState& pure, const StabilizerState& mixed, const QubitSet& measure,
                                const QubitSet& environment, bool need_environment) {
    check_pair(pure, mixed);
    EntropyTriple e;
    // Pure states: S(M) = S(E); rank over the columns of the smaller side.
    e.pure_measure = measure.size() >= environment.size() ? pure.subsystem_entropy_direct(measure)
                                                          : pure.subsystem_entropy_direct(environment);
    e.mixed_measure = mixed.subsystem_entropy_direct(measure);
    if (need_environment) {
        e.mixed_environment = mixed.subsystem_entropy_direct(environment);
    }
    return e;
}

}  // namespace infoflow
