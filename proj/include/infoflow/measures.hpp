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

#ifndef INFOFLOW_MEASURES_HPP
#define INFOFLOW_MEASURES_HPP

#include "infoflow/qubit_set.hpp"
#include "infoflow/tableau.hpp"

namespace infoflow {

// All observables are exact integers in bits. `pure` must be the evolved
// basis_state and `mixed` the evolved mixed_source state, both pushed through
// the same circuit realization; that provenance is the caller's contract.

/// Holevo information of the 2^S basis-state ensemble on `a`:
/// S(mixed_A) - S(pure_A). Every ensemble member's reduced state on `a` is a
/// Pauli conjugate of the pure reference, so they share one entropy.
int holevo_bits(const StabilizerState& pure, const StabilizerState& mixed, const QubitSet& a);

/// Coherent information S(rho_M) - S(rho_E) of the mixed-source state.
int coherent_bits(const StabilizerState& mixed, const QubitSet& measure);

/// H^M - H^E. Evaluates both pure entropies directly (no complementarity shortcut)
/// so agreement with coherent_bits is a genuine check of the tableau.
int private_info_bits(const StabilizerState& pure, const StabilizerState& mixed, const QubitSet& measure);

/// Three subsystem entropies shared by every observable of one record.
struct EntropyTriple {
    int pure_measure = 0;
    int mixed_measure = 0;
    int mixed_environment = 0;

    int holevo_measure() const { return mixed_measure - pure_measure; }
    /// Uses S(pure_E) = S(pure_M).
    int holevo_environment() const { return mixed_environment - pure_measure; }
    int coherent() const { return mixed_measure - mixed_environment; }
};

EntropyTriple measure_entropies(const StabilizerState& pure, const StabilizerState& mixed, const QubitSet& measure,
                                const QubitSet& environment, bool need_environment);

}  // namespace infoflow

#endif
