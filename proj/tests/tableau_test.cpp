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

#include <gtest/gtest.h>

#include <random>

#include "infoflow/oracle.hpp"

namespace infoflow {
namespace {

TEST(Tableau, BasisStateIsProduct) {
    StabilizerState s = StabilizerState::basis_state(6);
    EXPECT_TRUE(s.is_pure());
    for (std::size_t len = 0; len <= 6; len++) {
        EXPECT_EQ(s.subsystem_entropy(QubitSet::ring_interval(6, 1, len)), 0);
    }
}

TEST(Tableau, BellPairHasOneBit) {
    StabilizerState s = StabilizerState::basis_state(2);
    s.apply_hadamard(0);
    s.apply_cnot(0, 1);
    EXPECT_EQ(s.subsystem_entropy(QubitSet(2, {0})), 1);
    EXPECT_EQ(s.subsystem_entropy(QubitSet(2, {1})), 1);
    EXPECT_EQ(s.subsystem_entropy(QubitSet::all(2)), 0);
}

TEST(Tableau, GhzEntropies) {
    StabilizerState s = StabilizerState::basis_state(5);
    s.apply_hadamard(0);
    for (std::size_t q = 1; q < 5; q++) {
        s.apply_cnot(0, q);
    }
    EXPECT_EQ(s.subsystem_entropy(QubitSet(5, {2})), 1);
    EXPECT_EQ(s.subsystem_entropy(QubitSet(5, {0, 3})), 1);
    EXPECT_EQ(s.subsystem_entropy_direct(QubitSet(5, {0, 1, 2, 3})), 1);
}

TEST(Tableau, MixedSourceEntropyCountsSourceQubits) {
    QubitSet src(6, {1, 2, 4});
    StabilizerState s = StabilizerState::mixed_source(6, src);
    EXPECT_EQ(s.n_generators(), 3u);
    EXPECT_FALSE(s.is_pure());
    EXPECT_EQ(s.subsystem_entropy(QubitSet::all(6)), 3);
    EXPECT_EQ(s.subsystem_entropy(QubitSet(6, {0, 1, 2})), 2);
    EXPECT_EQ(s.subsystem_entropy(QubitSet::empty(6)), 0);
}

TEST(Tableau, PhaseGateKeepsZStates) {
    StabilizerState s = StabilizerState::basis_state(3);
    StabilizerState t = s;
    t.apply_phase(1);
    EXPECT_EQ(s, t);
    // P^2 = Z fixes |+> up to sign, H P P H = X fixes |0> up to sign.
    t.apply_hadamard(1);
    t.apply_phase(1);
    t.apply_phase(1);
    t.apply_hadamard(1);
    EXPECT_EQ(s, t);
}

TEST(Tableau, GatesRejectBadQubits) {
    StabilizerState s = StabilizerState::basis_state(3);
    EXPECT_THROW(s.apply_hadamard(3), std::out_of_range);
    EXPECT_THROW(s.apply_phase(7), std::out_of_range);
    EXPECT_THROW(s.apply_cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(s.subsystem_entropy(QubitSet::all(4)), std::invalid_argument);
}

TEST(Tableau, FromGeneratorsValidates) {
    BitMatrix ok(2, 4);  // X0 X1, Z0 Z1
    ok.set(0, 0, true);
    ok.set(0, 1, true);
    ok.set(1, 2, true);
    ok.set(1, 3, true);
    StabilizerState bell = StabilizerState::from_generators(ok);
    EXPECT_EQ(bell.subsystem_entropy(QubitSet(2, {0})), 1);

    BitMatrix anti(2, 4);  // X0, Z0 anticommute
    anti.set(0, 0, true);
    anti.set(1, 2, true);
    EXPECT_THROW(StabilizerState::from_generators(anti), std::invalid_argument);

    BitMatrix dep(2, 4);  // Z0 twice
    dep.set(0, 2, true);
    dep.set(1, 2, true);
    EXPECT_THROW(StabilizerState::from_generators(dep), std::invalid_argument);
}

TEST(Tableau, GeneratorMatrixRoundTrip) {
    StabilizerState s = StabilizerState::basis_state(4);
    s.apply_hadamard(0);
    s.apply_cnot(0, 2);
    s.apply_phase(2);
    s.apply_cnot(3, 1);
    StabilizerState t = StabilizerState::from_generators(s.generator_matrix());
    for (std::size_t len = 0; len <= 4; len++) {
        for (long long start = 0; start < 4; start++) {
            QubitSet a = QubitSet::ring_interval(4, start, len);
            EXPECT_EQ(s.subsystem_entropy(a), t.subsystem_entropy(a));
        }
    }
}

// 10^4 random gates on a 10-qubit register: invariants hold after every gate and
// entropies match the dense simulator every 500 gates.
TEST(Tableau, RandomGatePropertyAgainstDense) {
    constexpr std::size_t n = 10;
    std::mt19937_64 rng(777);
    QubitSet src(n, {2, 3, 7});
    StabilizerState pure = StabilizerState::basis_state(n);
    StabilizerState mixed = StabilizerState::mixed_source(n, src);
    oracle::DenseState dpure = oracle::DenseState::basis(n);
    for (int g = 1; g <= 10000; g++) {
        const std::size_t a = rng() % n;
        std::size_t b = rng() % (n - 1);
        b += b >= a;
        switch (rng() % 3) {
            case 0:
                pure.apply_hadamard(a);
                mixed.apply_hadamard(a);
                dpure.apply_hadamard(a);
                break;
            case 1:
                pure.apply_phase(a);
                mixed.apply_phase(a);
                dpure.apply_phase(a);
                break;
            default:
                pure.apply_cnot(a, b);
                mixed.apply_cnot(a, b);
                dpure.apply_cnot(a, b);
        }
        ASSERT_FALSE(pure.invariant_violation()) << "gate " << g;
        ASSERT_FALSE(mixed.invariant_violation()) << "gate " << g;
        if (g % 500 == 0) {
            ASSERT_LT(dpure.normalization_error(), 1e-12 * g);
            for (std::size_t len = 1; len < n; len += 2) {
                QubitSet cut = QubitSet::ring_interval(n, static_cast<long long>(rng() % n), len);
                ASSERT_NEAR(pure.subsystem_entropy(cut), oracle::dense_entropy(dpure, cut), 1e-9);
                ASSERT_EQ(pure.subsystem_entropy(cut), pure.subsystem_entropy_direct(cut));
                ASSERT_EQ(mixed.subsystem_entropy(cut), mixed.subsystem_entropy_direct(cut));
                ASSERT_EQ(mixed.subsystem_entropy(QubitSet::all(n)), 3);
            }
        }
    }
}

}  // namespace
}  // namespace infoflow
