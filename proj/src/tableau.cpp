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

#include "infoflow/tableau.hpp"

#include <stdexcept>

namespace infoflow {

StabilizerState::StabilizerState(std::size_t n, std::size_t k) : n_(n), k_(k), cols_(2 * n, k) {}

StabilizerState StabilizerState::basis_state(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("basis_state: need at least one qubit");
    }
    StabilizerState s(n, n);
    for (std::size_t q = 0; q < n; q++) {
        s.cols_.set(n + q, q, true);
    }
    return s;
}

StabilizerState StabilizerState::mixed_source(std::size_t n, const QubitSet& source) {
    if (n == 0) {
        throw std::invalid_argument("mixed_source: need at least one qubit");
    }
    if (source.n_qubits() != n) {
        throw std::invalid_argument("mixed_source: source set built for a different qubit count");
    }
    StabilizerState s(n, n - source.size());
    std::size_t r = 0;
    for (std::size_t q = 0; q < n; q++) {
        if (!source.contains(q)) {
            s.cols_.set(n + q, r++, true);
        }
    }
    return s;
}

StabilizerState StabilizerState::from_generators(const BitMatrix& generators) {
    if (generators.cols() == 0 || generators.cols() % 2 != 0) {
        throw std::invalid_argument("from_generators: need 2n columns with n >= 1");
    }
    std::size_t n = generators.cols() / 2;
    if (generators.rows() > n) {
        throw std::invalid_argument("from_generators: more generators than qubits");
    }
    StabilizerState s(n, generators.rows());
    s.cols_ = generators.transposed();
    if (auto err = s.invariant_violation()) {
        throw std::invalid_argument("from_generators: " + *err);
    }
    return s;
}

void StabilizerState::check_qubit(std::size_t q, const char* op) const {
    if (q >= n_) {
        throw std::out_of_range(std::string(op) + ": qubit " + std::to_string(q) + " out of range");
    }
}

void StabilizerState::apply_hadamard(std::size_t q) {
    check_qubit(q, "apply_hadamard");
    cols_.swap_rows(q, n_ + q);
}

void StabilizerState::apply_phase(std::size_t q) {
    check_qubit(q, "apply_phase");
    cols_.xor_row(q, n_ + q);
}

void StabilizerState::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control, "apply_cnot");
    check_qubit(target, "apply_cnot");
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control equals target");
    }
    cols_.xor_row(control, target);
    cols_.xor_row(n_ + target, n_ + control);
}

int StabilizerState::entropy_via_complement(const QubitSet& a) const {
    if (a.n_qubits() != n_) {
        throw std::invalid_argument("subsystem_entropy: subset built for a different qubit count");
    }
    RankBasis basis(k_);
    auto in_a = a.mask();
    for (std::size_t q = 0; q < n_ && !basis.full(); q++) {
        if (in_a[q]) {
            continue;
        }
        basis.insert(cols_.row(q));
        basis.insert(cols_.row(n_ + q));
    }
    return static_cast<int>(a.size()) - static_cast<int>(k_) + static_cast<int>(basis.rank());
}

int StabilizerState::subsystem_entropy(const QubitSet& a) const {
    if (is_pure() && 2 * a.size() > n_) {
        return entropy_via_complement(a.complement());
    }
    return entropy_via_complement(a);
}

int StabilizerState::subsystem_entropy_direct(const QubitSet& a) const { return entropy_via_complement(a); }

BitMatrix StabilizerState::generator_matrix() const { return cols_.transposed(); }

std::optional<std::string> StabilizerState::invariant_violation() const {
    BitMatrix g = generator_matrix();
    if (gf2_rank(g) != k_) {
        return "generators are linearly dependent";
    }
    for (std::size_t a = 0; a < k_; a++) {
        for (std::size_t b = a + 1; b < k_; b++) {
            bool parity = false;
            for (std::size_t q = 0; q < n_; q++) {
                parity ^= (g.get(a, q) && g.get(b, n_ + q)) != (g.get(b, q) && g.get(a, n_ + q));
            }
            if (parity) {
                return "generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute";
            }
        }
    }
    return std::nullopt;
}

}  // namespace infoflow
