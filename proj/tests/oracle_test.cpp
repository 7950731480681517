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

#include <gtest/gtest.h>

#include <cmath>

namespace infoflow::oracle {
namespace {

TEST(Oracle, BellStateEntropy) {
    DenseState s = DenseState::basis(2);
    s.apply_hadamard(0);
    s.apply_cnot(0, 1);
    EXPECT_NEAR(dense_entropy(s, QubitSet(2, {0})), 1.0, 1e-12);
    EXPECT_NEAR(dense_entropy(s, QubitSet::all(2)), 0.0, 1e-12);
}

TEST(Oracle, ProductStateEntropy) {
    DenseState s = DenseState::basis(4, 0b1010);
    s.apply_hadamard(2);
    s.apply_phase(2);
    EXPECT_NEAR(dense_entropy(s, QubitSet(4, {1, 2})), 0.0, 1e-12);
}

TEST(Oracle, MixedSourceIsMaximallyMixedOnSource) {
    DenseState s = DenseState::mixed_source(5, QubitSet(5, {1, 3}));
    EXPECT_NEAR(dense_entropy(s, QubitSet(5, {1, 3})), 2.0, 1e-12);
    EXPECT_NEAR(dense_entropy(s, QubitSet(5, {0, 1})), 1.0, 1e-12);
    EXPECT_NEAR(s.normalization_error(), 0.0, 1e-15);
}

TEST(Oracle, PhaseGateAmplitude) {
    DenseState s = DenseState::basis(1);
    s.apply_hadamard(0);
    s.apply_phase(0);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.amplitudes()(0) - std::complex<double>(r, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitudes()(1) - std::complex<double>(0, r)), 0.0, 1e-15);
}

TEST(Oracle, DensityEvolutionMatchesPureEvolution) {
    // rho = |psi><psi| evolved as a density matrix equals the outer product of the evolved vector.
    DenseState pure = DenseState::basis(3, 0b011);
    DenseState mixed = DenseState::mixed_source(3, QubitSet::empty(3));
    // Put mixed into |011> first with X gates built from H P P H.
    for (std::size_t q : {0, 1}) {
        mixed.apply_hadamard(q);
        mixed.apply_phase(q);
        mixed.apply_phase(q);
        mixed.apply_hadamard(q);
    }
    for (DenseState* s : {&pure, &mixed}) {
        s->apply_hadamard(0);
        s->apply_cnot(0, 2);
        s->apply_phase(2);
        s->apply_cnot(2, 1);
        s->apply_hadamard(1);
    }
    Eigen::MatrixXcd outer = pure.amplitudes() * pure.amplitudes().adjoint();
    EXPECT_LT((outer - mixed.density()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Oracle, DirectHolevoTrivialCases) {
    std::vector<Layer> none;
    QubitSet src(6, {2, 3});
    EXPECT_NEAR(direct_holevo(none, src, QubitSet(6, {1, 2, 3, 4})), 2.0, 1e-12);
    EXPECT_NEAR(direct_holevo(none, src, QubitSet(6, {0, 5})), 0.0, 1e-12);
    EXPECT_NEAR(direct_holevo(none, src, QubitSet(6, {3})), 1.0, 1e-12);
    EXPECT_NEAR(direct_holevo(none, src, QubitSet::empty(6)), 0.0, 1e-12);
}

TEST(Oracle, MixtureIdentityAndEqualEntropies) {
    auto circ = build_circuit(CircuitParams{8, 9, 21});
    QubitSet src(8, {1, 2, 5});
    QubitSet all = QubitSet::all(8);
    auto members = ensemble_reduced_states(circ, src, all);
    ASSERT_EQ(members.size(), 8u);
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(256, 256);
    for (const auto& rho : members) {
        avg += rho / 8.0;
    }
    DenseState mixed = DenseState::mixed_source(8, src);
    apply_circuit(mixed, std::span<const Layer>(circ));
    EXPECT_LT((avg - mixed.density()).cwiseAbs().maxCoeff(), 1e-12);

    QubitSet meas(8, {0, 1, 2});
    auto e = ensemble_entropies(circ, src, meas);
    for (double v : e) {
        EXPECT_NEAR(v, e.front(), 1e-9);
    }
}

TEST(Oracle, EntropyOfDegenerateProjector) {
    // Eight equal eigenvalues with the rest exactly zero.
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(64, 64);
    for (int i = 0; i < 8; i++) {
        rho(i * 8, i * 8) = 0.125;
    }
    EXPECT_NEAR(entropy_bits(rho), 3.0, 1e-12);
}

TEST(Oracle, Caps) {
    EXPECT_THROW(DenseState::basis(kMaxQubits + 1), std::invalid_argument);
    std::vector<Layer> none;
    QubitSet big = QubitSet::ring_interval(10, 0, 9);
    EXPECT_THROW(direct_holevo(none, big, QubitSet(10, {0})), std::invalid_argument);
    DenseState s = DenseState::basis(3);
    EXPECT_THROW(s.apply_hadamard(3), std::out_of_range);
    EXPECT_THROW(s.apply_cnot(1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace infoflow::oracle
