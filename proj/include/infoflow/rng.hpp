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

#ifndef INFOFLOW_RNG_HPP
#define INFOFLOW_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace infoflow {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive hash of a key tuple, used to derive independent per-sample streams.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// Fair-coin stream consuming a std::mt19937_64 word at a time, low bit first.
/// mt19937_64 output is fully specified by the standard, so streams are
/// reproducible across platforms and compilers.
class CoinStream {
   public:
    explicit CoinStream(std::uint64_t seed) : engine_(seed) {}

    bool flip() {
        if (bits_left_ == 0) {
            buffer_ = engine_();
            bits_left_ = 64;
        }
        bool b = buffer_ & 1u;
        buffer_ >>= 1;
        bits_left_--;
        return b;
    }

    /// Uniform integer in [0, bound) by rejection on raw engine output.
    std::uint64_t below(std::uint64_t bound);

   private:
    std::mt19937_64 engine_;
    std::uint64_t buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace infoflow

#endif
