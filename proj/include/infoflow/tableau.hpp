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

#ifndef INFOFLOW_TABLEAU_HPP
#define INFOFLOW_TABLEAU_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "infoflow/gf2.hpp"
#include "infoflow/qubit_set.hpp"

namespace infoflow {

/// Phase-free stabilizer state on `n` qubits with `k <= n` independent,
/// mutually commuting generators. `k == n` is a pure state; every missing
/// generator contributes one maximally mixed logical qubit.
///
/// Generators are stored column-major: row `q` of `columns()` holds the X bit of
/// qubit `q` across all generators and row `n + q` holds the Z bit, so each gate
/// touches two or four packed bit vectors.
class StabilizerState {
   public:
    /// {Z_0, ..., Z_{n-1}}: any computational basis state up to sign.
    static StabilizerState basis_state(std::size_t n);
    /// One Z generator per qubit outside `source`: (I/2)^{source} (x) |0><0|^{rest}.
    static StabilizerState mixed_source(std::size_t n, const QubitSet& source);
    /// Builds a state from a k x 2n generator matrix (X block then Z block).
    /// Throws if the rows are dependent or fail to commute.
    static StabilizerState from_generators(const BitMatrix& generators);

    std::size_t n_qubits() const { return n_; }
    std::size_t n_generators() const { return k_; }
    bool is_pure() const { return k_ == n_; }

    void apply_hadamard(std::size_t q);
    void apply_phase(std::size_t q);
    void apply_cnot(std::size_t control, std::size_t target);

    /// Von Neumann entropy of the reduced state on `a`, in bits:
    /// |A| - k + rank(generators restricted to the complement of A).
    /// Pure states are evaluated on whichever side of the cut is smaller.
    int subsystem_entropy(const QubitSet& a) const;
    /// Same quantity, always through the complement-rank formula for `a` itself.
    int subsystem_entropy_direct(const QubitSet& a) const;

    /// k x 2n generator matrix, row r = generator r.
    BitMatrix generator_matrix() const;
    const BitMatrix& columns() const { return cols_; }

    /// Nullopt when rows are independent and pairwise commuting, else a description.
    std::optional<std::string> invariant_violation() const;

    bool operator==(const StabilizerState&) const = default;

   private:
    StabilizerState(std::size_t n, std::size_t k);
    void check_qubit(std::size_t q, const char* op) const;
    int entropy_via_complement(const QubitSet& a) const;

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    BitMatrix cols_;
};

inline StabilizerState init_basis_state(std::size_t n) { return StabilizerState::basis_state(n); }
inline StabilizerState init_mixed_source(std::size_t n, const QubitSet& source) {
    return StabilizerState::mixed_source(n, source);
}

}  // namespace infoflow

#endif
