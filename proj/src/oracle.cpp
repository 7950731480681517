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

#include "infoflow/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace infoflow::oracle {

namespace {

using cd = std::complex<double>;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_size(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw std::invalid_argument("dense oracle supports 1.." + std::to_string(kMaxQubits) + " qubits (got " +
                                    std::to_string(n) + ")");
    }
}

// Gate kernels on a view of 2^n amplitudes; density matrices use them for the
// left multiplication and column operations for the right one.
template <typename View>
void kernel_h(View&& v, std::size_t dim, std::size_t q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; i++) {
        if (i & bit) {
            continue;
        }
        cd x = v(i);
        cd y = v(i | bit);
        v(i) = (x + y) * kInvSqrt2;
        v(i | bit) = (x - y) * kInvSqrt2;
    }
}

template <typename View>
void kernel_p(View&& v, std::size_t dim, std::size_t q) {
    const std::size_t bit = std::size_t{1} << q;
    const cd phase(0, 1);
    for (std::size_t i = 0; i < dim; i++) {
        if (i & bit) {
            v(i) *= phase;
        }
    }
}

template <typename View>
void kernel_cnot(View&& v, std::size_t dim, std::size_t c, std::size_t t) {
    const std::size_t cb = std::size_t{1} << c;
    const std::size_t tb = std::size_t{1} << t;
    for (std::size_t i = 0; i < dim; i++) {
        if ((i & cb) && !(i & tb)) {
            std::swap(v(i), v(i | tb));
        }
    }
}

// Splits a full basis index into (index over `a`, index over the complement).
struct IndexSplit {
    std::vector<std::size_t> a_index;
    std::vector<std::size_t> b_index;
};

IndexSplit split_indices(std::size_t n, const QubitSet& a) {
    const std::size_t dim = std::size_t{1} << n;
    IndexSplit s{std::vector<std::size_t>(dim), std::vector<std::size_t>(dim)};
    auto in_a = a.mask();
    for (std::size_t i = 0; i < dim; i++) {
        std::size_t ai = 0, bi = 0, ak = 0, bk = 0;
        for (std::size_t q = 0; q < n; q++) {
            std::size_t bit = (i >> q) & 1u;
            if (in_a[q]) {
                ai |= bit << ak++;
            } else {
                bi |= bit << bk++;
            }
        }
        s.a_index[i] = ai;
        s.b_index[i] = bi;
    }
    return s;
}

}  // namespace

DenseState::DenseState(std::size_t n, bool pure) : n_(n), pure_(pure) { check_size(n); }

DenseState DenseState::basis(std::size_t n, std::uint64_t bits) {
    DenseState s(n, true);
    const std::size_t dim = std::size_t{1} << n;
    if (bits >= dim) {
        throw std::invalid_argument("DenseState::basis: bit string wider than the register");
    }
    s.psi_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    s.psi_(static_cast<Eigen::Index>(bits)) = 1.0;
    return s;
}

DenseState DenseState::mixed_source(std::size_t n, const QubitSet& source) {
    DenseState s(n, false);
    if (source.n_qubits() != n) {
        throw std::invalid_argument("DenseState::mixed_source: source built for a different qubit count");
    }
    const std::size_t dim = std::size_t{1} << n;
    std::size_t source_mask = 0;
    for (std::size_t q : source) {
        source_mask |= std::size_t{1} << q;
    }
    const double p = 1.0 / static_cast<double>(std::size_t{1} << source.size());
    s.rho_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; i++) {
        if ((i & ~source_mask) == 0) {
            s.rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p;
        }
    }
    return s;
}

void DenseState::check_qubit(std::size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("dense gate: qubit " + std::to_string(q) + " out of range");
    }
}

void DenseState::apply_hadamard(std::size_t q) {
    check_qubit(q);
    const std::size_t dim = std::size_t{1} << n_;
    if (pure_) {
        kernel_h([&](std::size_t i) -> cd& { return psi_(static_cast<Eigen::Index>(i)); }, dim, q);
        return;
    }
    for (std::size_t c = 0; c < dim; c++) {
        kernel_h([&](std::size_t i) -> cd& { return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)); },
                 dim, q);
    }
    // Right multiplication by H mixes whole columns.
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; i++) {
        if (i & bit) {
            continue;
        }
        const auto ci = static_cast<Eigen::Index>(i);
        const auto cj = static_cast<Eigen::Index>(i | bit);
        Eigen::VectorXcd x = rho_.col(ci);
        rho_.col(ci) = (x + rho_.col(cj)) * kInvSqrt2;
        rho_.col(cj) = (x - rho_.col(cj)) * kInvSqrt2;
    }
}

void DenseState::apply_phase(std::size_t q) {
    check_qubit(q);
    const std::size_t dim = std::size_t{1} << n_;
    if (pure_) {
        kernel_p([&](std::size_t i) -> cd& { return psi_(static_cast<Eigen::Index>(i)); }, dim, q);
        return;
    }
    for (std::size_t c = 0; c < dim; c++) {
        kernel_p([&](std::size_t i) -> cd& { return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)); },
                 dim, q);
    }
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; i++) {
        if (i & bit) {
            rho_.col(static_cast<Eigen::Index>(i)) *= cd(0, -1);
        }
    }
}

void DenseState::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("dense cnot: control equals target");
    }
    const std::size_t dim = std::size_t{1} << n_;
    if (pure_) {
        kernel_cnot([&](std::size_t i) -> cd& { return psi_(static_cast<Eigen::Index>(i)); }, dim, control, target);
        return;
    }
    for (std::size_t c = 0; c < dim; c++) {
        kernel_cnot(
            [&](std::size_t i) -> cd& { return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)); }, dim,
            control, target);
    }
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < dim; i++) {
        if ((i & cb) && !(i & tb)) {
            rho_.col(static_cast<Eigen::Index>(i)).swap(rho_.col(static_cast<Eigen::Index>(i | tb)));
        }
    }
}

Eigen::MatrixXcd DenseState::reduced_density(const QubitSet& a) const {
    if (a.n_qubits() != n_) {
        throw std::invalid_argument("reduced_density: subset built for a different qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_;
    const auto da = static_cast<Eigen::Index>(std::size_t{1} << a.size());
    const auto db = static_cast<Eigen::Index>(std::size_t{1} << (n_ - a.size()));
    IndexSplit split = split_indices(n_, a);
    if (pure_) {
        Eigen::MatrixXcd psi(da, db);
        for (std::size_t i = 0; i < dim; i++) {
            psi(static_cast<Eigen::Index>(split.a_index[i]), static_cast<Eigen::Index>(split.b_index[i])) =
                psi_(static_cast<Eigen::Index>(i));
        }
        return psi * psi.adjoint();
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, da);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            if (split.b_index[i] == split.b_index[j]) {
                out(static_cast<Eigen::Index>(split.a_index[i]), static_cast<Eigen::Index>(split.a_index[j])) +=
                    rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return out;
}

double DenseState::normalization_error() const {
    if (pure_) {
        return std::abs(1.0 - psi_.squaredNorm());
    }
    return std::abs(1.0 - rho_.trace().real());
}

void dense_apply(DenseState& state, const Gate& gate) {
    switch (gate.kind) {
        case GateKind::hadamard:
            state.apply_hadamard(gate.a);
            break;
        case GateKind::phase:
            state.apply_phase(gate.a);
            break;
        case GateKind::cnot:
            state.apply_cnot(gate.a, gate.b);
            break;
    }
}

double entropy_bits(const Eigen::MatrixXcd& rho) {
    if (rho.rows() == 1) {
        return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    Eigen::VectorXd spectrum;
    if (solver.info() == Eigen::Success) {
        spectrum = solver.eigenvalues();
    } else {
        // The QR iteration can stall on exact projectors carrying denormal
        // round-off; for a positive semidefinite matrix the singular values
        // are the eigenvalues.
        spectrum = Eigen::JacobiSVD<Eigen::MatrixXcd>(rho).singularValues();
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); i++) {
        double lam = spectrum(i);
        if (lam > kEigenFloor) {
            s -= lam * std::log2(lam);
        }
    }
    return s;
}

double dense_entropy(const DenseState& state, const QubitSet& a) {
    if (a.empty()) {
        return 0.0;
    }
    // Schmidt symmetry: a pure state has equal spectra on both sides of a cut.
    if (state.is_pure() && 2 * a.size() > state.n_qubits()) {
        const QubitSet b = a.complement();
        return b.empty() ? 0.0 : entropy_bits(state.reduced_density(b));
    }
    return entropy_bits(state.reduced_density(a));
}

namespace {

void check_ensemble(const QubitSet& source, const QubitSet& measure) {
    check_size(measure.n_qubits());
    if (source.n_qubits() != measure.n_qubits()) {
        throw std::invalid_argument("direct_holevo: source and measure built for different qubit counts");
    }
    if (source.size() > kMaxSourceQubits) {
        throw std::invalid_argument("direct_holevo: at most " + std::to_string(kMaxSourceQubits) + " source qubits");
    }
}

// Evolves every input |i> on the source and hands the output state to `f`.
template <typename F>
void for_each_member(std::span<const Layer> circuit, const QubitSet& source, F&& f) {
    const std::size_t n = source.n_qubits();
    const std::size_t inputs = std::size_t{1} << source.size();
    for (std::size_t i = 0; i < inputs; i++) {
        std::uint64_t bits = 0;
        std::size_t k = 0;
        for (std::size_t q : source) {
            bits |= static_cast<std::uint64_t>((i >> k++) & 1u) << q;
        }
        DenseState psi = DenseState::basis(n, bits);
        apply_circuit(psi, circuit);
        f(psi);
    }
}

}  // namespace

std::vector<Eigen::MatrixXcd> ensemble_reduced_states(std::span<const Layer> circuit, const QubitSet& source,
                                                      const QubitSet& measure) {
    check_ensemble(source, measure);
    std::vector<Eigen::MatrixXcd> out;
    for_each_member(circuit, source, [&](const DenseState& psi) { out.push_back(psi.reduced_density(measure)); });
    return out;
}

std::vector<double> ensemble_entropies(std::span<const Layer> circuit, const QubitSet& source,
                                       const QubitSet& measure) {
    check_ensemble(source, measure);
    std::vector<double> out;
    for_each_member(circuit, source, [&](const DenseState& psi) { out.push_back(dense_entropy(psi, measure)); });
    return out;
}

double direct_holevo(std::span<const Layer> circuit, const QubitSet& source, const QubitSet& measure) {
    check_ensemble(source, measure);
    if (measure.empty()) {
        return 0.0;
    }
    const double p = 1.0 / static_cast<double>(std::size_t{1} << source.size());
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << measure.size());
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
    double mean_entropy = 0.0;
    for_each_member(circuit, source, [&](const DenseState& psi) {
        avg += p * psi.reduced_density(measure);
        mean_entropy += p * dense_entropy(psi, measure);
    });
    return entropy_bits(avg) - mean_entropy;
}

}  // namespace infoflow::oracle
