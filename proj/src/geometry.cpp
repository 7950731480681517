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

#include "infoflow/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace infoflow {

std::string GeometrySpec::selection_label() const {
    bool rs = source_selection == Selection::random_qubits;
    bool rm = measure_selection == Selection::random_qubits;
    if (rs && rm) {
        return "random_both";
    }
    if (rs) {
        return "random_source";
    }
    if (rm) {
        return "random_measure";
    }
    return "consecutive";
}

Selection parse_selection_label(std::string_view label, Selection* measure) {
    Selection src = Selection::consecutive;
    Selection mea = Selection::consecutive;
    if (label == "random_source") {
        src = Selection::random_qubits;
    } else if (label == "random_measure") {
        mea = Selection::random_qubits;
    } else if (label == "random_both") {
        src = mea = Selection::random_qubits;
    } else if (label != "consecutive") {
        throw std::invalid_argument("unknown selection '" + std::string(label) + "'");
    }
    *measure = mea;
    return src;
}

std::string GeometrySpec::descriptor() const {
    return "s16=" + std::to_string(s16) + ";m16=" + std::to_string(m16) + ";l16=" + std::to_string(l16) +
           ";selection=" + selection_label();
}

std::uint64_t GeometrySpec::id() const { return fnv1a64(descriptor()); }

void GeometrySpec::validate() const {
    if (s16 < 0 || s16 > 16 || m16 < 0 || m16 > 16) {
        throw std::invalid_argument("geometry: s16 and m16 must lie in [0, 16]");
    }
    if (source_selection == Selection::consecutive && measure_selection == Selection::consecutive) {
        // S must not wrap onto itself; any placement on the ring is otherwise legal.
        if (l16 + s16 > 16 || l16 < -16) {
            throw std::invalid_argument("geometry: l16 places the source off the ring");
        }
    }
}

std::optional<int> GeometrySpec::min_distance16() const {
    if (source_selection != Selection::consecutive || measure_selection != Selection::consecutive) {
        return std::nullopt;
    }
    int s_left = m16 - l16 - s16;
    int s_right = m16 - l16;
    if (s_left >= 0 && s_right <= m16) {
        return std::min(s_left, l16);
    }
    // Gap going right from M's right edge to S's left edge, modulo the ring.
    int gap_right = ((s_left - m16) % 16 + 16) % 16;
    int gap_left = 16 - m16 - s16 - gap_right;
    if (gap_left < 0 || gap_right + s16 + m16 > 16) {
        return 0;
    }
    return std::min(gap_left, gap_right);
}

Geometry Geometry::from_sets(QubitSet source, QubitSet measure) {
    if (source.n_qubits() != measure.n_qubits()) {
        throw std::invalid_argument("geometry: source and measure built for different qubit counts");
    }
    Geometry g;
    g.environment = measure.complement();
    g.source = std::move(source);
    g.measure = std::move(measure);
    return g;
}

QubitSet random_subset(std::size_t n, std::size_t size, CoinStream& coins) {
    if (size > n) {
        throw std::invalid_argument("random_subset: subset larger than the system");
    }
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < size; i++) {
        std::size_t j = i + static_cast<std::size_t>(coins.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    return QubitSet(n, std::move(pool));
}

Geometry resolve_geometry(const GeometrySpec& spec, std::size_t n, CoinStream* coins) {
    spec.validate();
    if (n == 0 || n % 16 != 0) {
        throw std::invalid_argument("geometry: sixteenths need N to be a positive multiple of 16 (got " +
                                    std::to_string(n) + ")");
    }
    const std::size_t seg = n / 16;
    const std::size_t s_size = static_cast<std::size_t>(spec.s16) * seg;
    const std::size_t m_size = static_cast<std::size_t>(spec.m16) * seg;
    bool needs_coins =
        spec.source_selection == Selection::random_qubits || spec.measure_selection == Selection::random_qubits;
    if (needs_coins && coins == nullptr) {
        throw std::invalid_argument("geometry: random selection needs a coin stream");
    }

    QubitSet measure = spec.measure_selection == Selection::consecutive ? QubitSet::ring_interval(n, 0, m_size)
                                                                        : random_subset(n, m_size, *coins);
    QubitSet source;
    if (spec.source_selection == Selection::consecutive) {
        long long start = static_cast<long long>(m_size) - static_cast<long long>(spec.l16) * static_cast<long long>(seg) -
                          static_cast<long long>(s_size);
        source = QubitSet::ring_interval(n, start, s_size);
    } else {
        source = random_subset(n, s_size, *coins);
    }
    return Geometry::from_sets(std::move(source), std::move(measure));
}

}  // namespace infoflow
