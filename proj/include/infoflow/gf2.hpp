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

#ifndef INFOFLOW_GF2_HPP
#define INFOFLOW_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace infoflow {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Dense row-packed bit matrix over GF(2). Padding bits past `cols()` are always zero.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / kWordBits] ^= word_t{1} << (c % kWordBits); }

    std::span<word_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
    std::span<const word_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

    /// row(dst) ^= row(src)
    void xor_row(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<word_t> data_;
};

/// Incremental echelon basis for vectors of a fixed bit width.
///
/// Each stored vector owns a distinct pivot (its lowest set bit), so reducing an
/// incoming vector walks its set bits from low to high and XORs the matching
/// pivot vector in. Words below a pivot's word are zero and are skipped.
class RankBasis {
   public:
    explicit RankBasis(std::size_t bits);

    /// Inserts `v` (at least `words_for_bits(bits)` words) and returns true if it
    /// was independent of the vectors already present.
    bool insert(std::span<const word_t> v);

    std::size_t rank() const { return rank_; }
    std::size_t bits() const { return bits_; }
    bool full() const { return rank_ == bits_; }
    void clear();

   private:
    std::size_t bits_;
    std::size_t words_;
    std::size_t rank_ = 0;
    std::vector<word_t> store_;
    std::vector<std::int32_t> slot_of_pivot_;
    std::vector<word_t> scratch_;
};

/// Rank over GF(2). The argument is not modified.
std::size_t gf2_rank(const BitMatrix& m);

/// Rank of the subset of rows of `m` listed in `rows`.
std::size_t gf2_rank_of_rows(const BitMatrix& m, std::span<const std::size_t> rows);

}  // namespace infoflow

#endif
