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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace infoflow {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for_bits(cols)), data_(rows * words_for_bits(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    word_t& w = data_[r * words_ + c / kWordBits];
    word_t mask = word_t{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
}

void BitMatrix::xor_row(std::size_t src, std::size_t dst) {
    const word_t* s = data_.data() + src * words_;
    word_t* d = data_.data() + dst * words_;
    for (std::size_t k = 0; k < words_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * words_, data_.begin() + (a + 1) * words_, data_.begin() + b * words_);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

RankBasis::RankBasis(std::size_t bits)
    : bits_(bits), words_(words_for_bits(bits)), slot_of_pivot_(bits, -1), scratch_(words_for_bits(bits), 0) {
    store_.reserve(bits_ * words_);
}

void RankBasis::clear() {
    rank_ = 0;
    store_.clear();
    std::fill(slot_of_pivot_.begin(), slot_of_pivot_.end(), -1);
}

bool RankBasis::insert(std::span<const word_t> v) {
    if (v.size() < words_) {
        throw std::invalid_argument("RankBasis::insert: vector narrower than basis width");
    }
    if (full()) {
        return false;
    }
    std::copy_n(v.begin(), words_, scratch_.begin());
    word_t* x = scratch_.data();
    for (std::size_t w = 0; w < words_; w++) {
        while (x[w] != 0) {
            std::size_t pivot = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x[w]));
            std::int32_t slot = slot_of_pivot_[pivot];
            if (slot < 0) {
                slot_of_pivot_[pivot] = static_cast<std::int32_t>(rank_);
                store_.insert(store_.end(), scratch_.begin(), scratch_.end());
                rank_++;
                return true;
            }
            const word_t* b = store_.data() + static_cast<std::size_t>(slot) * words_;
            for (std::size_t k = w; k < words_; k++) {
                x[k] ^= b[k];
            }
        }
    }
    return false;
}

std::size_t gf2_rank(const BitMatrix& m) {
    RankBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows() && !basis.full(); r++) {
        basis.insert(m.row(r));
    }
    return basis.rank();
}

std::size_t gf2_rank_of_rows(const BitMatrix& m, std::span<const std::size_t> rows) {
    RankBasis basis(m.cols());
    for (std::size_t r : rows) {
        if (basis.full()) {
            break;
        }
        basis.insert(m.row(r));
    }
    return basis.rank();
}

}  // namespace infoflow
