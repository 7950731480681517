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

#include "infoflow/gf2.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace infoflow {
namespace {

// Textbook elimination on a vector<vector<bool>>; shares nothing with BitMatrix.
std::size_t naive_rank(std::vector<std::vector<bool>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); c++) {
        std::size_t pivot = rank;
        while (pivot < m.size() && !m[pivot][c]) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); r++) {
            if (r != rank && m[r][c]) {
                for (std::size_t k = 0; k < cols; k++) {
                    m[r][k] = m[r][k] != m[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            m.set(r, c, bit(rng));
        }
    }
    return m;
}

std::vector<std::vector<bool>> to_bools(const BitMatrix& m) {
    std::vector<std::vector<bool>> out(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m.get(r, c);
        }
    }
    return out;
}

TEST(BitMatrix, SetGetFlip) {
    BitMatrix m(3, 130);
    m.set(2, 129, true);
    m.set(0, 64, true);
    EXPECT_TRUE(m.get(2, 129));
    EXPECT_TRUE(m.get(0, 64));
    EXPECT_FALSE(m.get(1, 64));
    m.flip(2, 129);
    EXPECT_FALSE(m.get(2, 129));
    EXPECT_EQ(m.words_per_row(), 3u);
}

TEST(BitMatrix, XorAndSwapRows) {
    BitMatrix m(2, 70);
    m.set(0, 1, true);
    m.set(0, 69, true);
    m.set(1, 69, true);
    m.xor_row(0, 1);
    EXPECT_TRUE(m.get(1, 1));
    EXPECT_FALSE(m.get(1, 69));
    m.swap_rows(0, 1);
    EXPECT_TRUE(m.get(0, 1));
    EXPECT_FALSE(m.get(0, 69));
    EXPECT_TRUE(m.get(1, 69));
}

TEST(BitMatrix, TransposeTwiceIsIdentity) {
    std::mt19937_64 rng(3);
    BitMatrix m = random_matrix(37, 91, 0.4, rng);
    BitMatrix t = m.transposed();
    ASSERT_EQ(t.rows(), 91u);
    ASSERT_EQ(t.cols(), 37u);
    EXPECT_EQ(t.get(5, 7), m.get(7, 5));
    EXPECT_EQ(t.transposed(), m);
}

TEST(Gf2Rank, SmallCases) {
    EXPECT_EQ(gf2_rank(BitMatrix(4, 4)), 0u);
    EXPECT_EQ(gf2_rank(BitMatrix::identity(67)), 67u);
    BitMatrix m(3, 3);
    // rows 110, 011, 101: the third is the sum of the first two.
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    m.set(2, 0, true);
    m.set(2, 2, true);
    EXPECT_EQ(gf2_rank(m), 2u);
}

TEST(Gf2Rank, MatchesNaiveEliminationOnRandomMatrices) {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 300; trial++) {
        const std::size_t rows = 1 + rng() % 80;
        const std::size_t cols = 1 + rng() % 150;
        const double density = (trial % 5 + 1) / 10.0;
        BitMatrix m = random_matrix(rows, cols, density, rng);
        const std::size_t expected = naive_rank(to_bools(m));
        ASSERT_EQ(gf2_rank(m), expected) << rows << "x" << cols;
        ASSERT_EQ(gf2_rank(m.transposed()), expected);
    }
}

TEST(Gf2Rank, RowSubset) {
    std::mt19937_64 rng(9);
    BitMatrix m = random_matrix(40, 50, 0.5, rng);
    std::vector<std::size_t> rows{1, 4, 9, 16, 25, 36};
    BitMatrix sub(rows.size(), 50);
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t c = 0; c < 50; c++) {
            sub.set(i, c, m.get(rows[i], c));
        }
    }
    EXPECT_EQ(gf2_rank_of_rows(m, rows), naive_rank(to_bools(sub)));
}

TEST(RankBasis, IncrementalInsertReportsIndependence) {
    std::mt19937_64 rng(11);
    BitMatrix m = random_matrix(60, 40, 0.3, rng);
    RankBasis basis(40);
    std::vector<std::vector<bool>> seen;
    for (std::size_t r = 0; r < m.rows(); r++) {
        seen.push_back(to_bools(m)[r]);
        const std::size_t before = basis.rank();
        const bool independent = basis.insert(m.row(r));
        EXPECT_EQ(basis.rank(), naive_rank(seen));
        EXPECT_EQ(independent, basis.rank() == before + 1);
    }
    EXPECT_TRUE(basis.full());
    basis.clear();
    EXPECT_EQ(basis.rank(), 0u);
}

}  // namespace
}  // namespace infoflow
