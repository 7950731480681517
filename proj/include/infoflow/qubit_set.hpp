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

#ifndef INFOFLOW_QUBIT_SET_HPP
#define INFOFLOW_QUBIT_SET_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace infoflow {

/// Sorted set of distinct qubit indices drawn from [0, n_qubits).
class QubitSet {
   public:
    QubitSet() = default;
    QubitSet(std::size_t n_qubits, std::vector<std::size_t> members);
    QubitSet(std::size_t n_qubits, std::initializer_list<std::size_t> members);

    static QubitSet empty(std::size_t n_qubits) { return QubitSet(n_qubits, std::vector<std::size_t>{}); }
    static QubitSet all(std::size_t n_qubits);
    /// `length` consecutive qubits starting at `start`, wrapping mod n_qubits.
    static QubitSet ring_interval(std::size_t n_qubits, long long start, std::size_t length);

    std::size_t n_qubits() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::size_t>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(std::size_t q) const;
    QubitSet complement() const;
    bool is_subset_of(const QubitSet& other) const;
    std::size_t intersection_size(const QubitSet& other) const;
    /// Per-qubit membership flags of length n_qubits.
    std::vector<bool> mask() const;

    std::string to_string() const;

    bool operator==(const QubitSet&) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::size_t> members_;
};

}  // namespace infoflow

#endif
