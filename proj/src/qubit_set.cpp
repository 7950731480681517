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

#include "infoflow/qubit_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace infoflow {

QubitSet::QubitSet(std::size_t n_qubits, std::vector<std::size_t> members) : n_(n_qubits), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("QubitSet: duplicate qubit index");
    }
    if (!members_.empty() && members_.back() >= n_) {
        throw std::out_of_range("QubitSet: qubit index " + std::to_string(members_.back()) + " out of range for " +
                                std::to_string(n_) + " qubits");
    }
}

QubitSet::QubitSet(std::size_t n_qubits, std::initializer_list<std::size_t> members)
    : QubitSet(n_qubits, std::vector<std::size_t>(members)) {}

QubitSet QubitSet::all(std::size_t n_qubits) {
    std::vector<std::size_t> m(n_qubits);
    for (std::size_t q = 0; q < n_qubits; q++) {
        m[q] = q;
    }
    return QubitSet(n_qubits, std::move(m));
}

QubitSet QubitSet::ring_interval(std::size_t n_qubits, long long start, std::size_t length) {
    if (length > n_qubits) {
        throw std::invalid_argument("QubitSet::ring_interval: interval longer than the ring");
    }
    long long n = static_cast<long long>(n_qubits);
    std::vector<std::size_t> m;
    m.reserve(length);
    for (std::size_t i = 0; i < length; i++) {
        long long q = ((start + static_cast<long long>(i)) % n + n) % n;
        m.push_back(static_cast<std::size_t>(q));
    }
    return QubitSet(n_qubits, std::move(m));
}

bool QubitSet::contains(std::size_t q) const {
    return std::binary_search(members_.begin(), members_.end(), q);
}

QubitSet QubitSet::complement() const {
    std::vector<std::size_t> out;
    out.reserve(n_ - members_.size());
    auto it = members_.begin();
    for (std::size_t q = 0; q < n_; q++) {
        if (it != members_.end() && *it == q) {
            ++it;
        } else {
            out.push_back(q);
        }
    }
    return QubitSet(n_, std::move(out));
}

bool QubitSet::is_subset_of(const QubitSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::size_t QubitSet::intersection_size(const QubitSet& other) const {
    std::size_t count = 0;
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            count++;
            ++a;
            ++b;
        }
    }
    return count;
}

std::vector<bool> QubitSet::mask() const {
    std::vector<bool> m(n_, false);
    for (std::size_t q : members_) {
        m[q] = true;
    }
    return m;
}

std::string QubitSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(members_[i]);
    }
    return s + "}";
}

}  // namespace infoflow
