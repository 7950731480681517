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

#ifndef INFOFLOW_ORACLE_HPP
#define INFOFLOW_ORACLE_HPP

// Dense state-vector / density-matrix reference used only to validate the
// stabilizer fast path. Sizes are capped; nothing here is on a hot path.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "infoflow/circuit.hpp"
#include "infoflow/qubit_set.hpp"

namespace infoflow::oracle {

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr std::size_t kMaxSourceQubits = 8;
inline constexpr double kEigenFloor = 1e-12;

enum class GateKind { hadamard, phase, cnot };

struct Gate {
    GateKind kind;
    std::size_t a;
    std::size_t b = 0;  // target, cnot only
};

/// Qubit q is bit q of the basis-state index.
class DenseState {
   public:
    /// Pure computational basis state |bits>.
    static DenseState basis(std::size_t n, std::uint64_t bits = 0);
    /// (I/2)^{source} (x) |0><0|^{rest} as a density matrix.
    static DenseState mixed_source(std::size_t n, const QubitSet& source);

    std::size_t n_qubits() const { return n_; }
    bool is_pure() const { return pure_; }
    const Eigen::VectorXcd& amplitudes() const { return psi_; }
    const Eigen::MatrixXcd& density() const { return rho_; }

    void apply_hadamard(std::size_t q);
    void apply_phase(std::size_t q);
    void apply_cnot(std::size_t control, std::size_t target);

    /// Partial trace onto `a`; basis index of the result packs a's members in ascending order.
    Eigen::MatrixXcd reduced_density(const QubitSet& a) const;
    /// |1 - <psi|psi>| or |1 - tr rho|.
    double normalization_error() const;

   private:
    DenseState(std::size_t n, bool pure);
    void check_qubit(std::size_t q) const;

    std::size_t n_;
    bool pure_;
    Eigen::VectorXcd psi_;
    Eigen::MatrixXcd rho_;
};

void dense_apply(DenseState& state, const Gate& gate);

/// -sum lambda log2 lambda over eigenvalues of a Hermitian matrix, floor kEigenFloor.
double entropy_bits(const Eigen::MatrixXcd& rho);

double dense_entropy(const DenseState& state, const QubitSet& a);

/// Holevo information on `measure` evaluated literally: all 2^|source| basis
/// inputs, each evolved densely, p_i = 2^-|source|.
double direct_holevo(std::span<const Layer> circuit, const QubitSet& source, const QubitSet& measure);

/// Reduced states rho_i^M of every ensemble member (test helper for the
/// equal-entropy and mixture identities).
/// Entropy on `measure` of each evolved input state, in input order.
std::vector<double> ensemble_entropies(std::span<const Layer> circuit, const QubitSet& source,
                                       const QubitSet& measure);
std::vector<Eigen::MatrixXcd> ensemble_reduced_states(std::span<const Layer> circuit, const QubitSet& source,
                                                      const QubitSet& measure);

}  // namespace infoflow::oracle

#endif
