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

#ifndef INFOFLOW_VALIDATE_HPP
#define INFOFLOW_VALIDATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "infoflow/qubit_set.hpp"
#include "infoflow/tableau.hpp"

namespace infoflow {

/// Entropy of a stabilizer state on a subset, in bits. Replaceable so the
/// suite can be pointed at a deliberately broken formula.
using EntropyFunction = std::function<int(const StabilizerState&, const QubitSet&)>;

struct ValidationOptions {
    std::size_t instances = 200;
    std::uint64_t seed = 0x5eed0ac1e;
    std::size_t min_qubits = 2;
    std::size_t max_qubits = 10;
    std::size_t max_depth = 20;
    double tolerance = 1e-9;
    /// Empty means StabilizerState::subsystem_entropy.
    EntropyFunction entropy;
    /// Also run a short pass with an off-by-one rank term and require it to fail.
    bool mutation_check = true;
};

struct ValidationCheck {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double max_error = 0.0;
    /// First failing instance, empty when the check passed.
    std::string first_failure;

    bool passed() const { return failures == 0 && cases > 0; }
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    double seconds = 0.0;

    bool passed() const;
    const ValidationCheck* find(const std::string& name) const;
    std::string summary() const;
};

/// One random instance of the oracle suite: qubit count, depth, sets and circuit seed.
struct ValidationInstance {
    std::size_t n = 0;
    std::size_t depth = 0;
    std::uint64_t circuit_seed = 0;
    QubitSet source;
    QubitSet measure;
    bool random_sets = false;

    std::string describe() const;
};

ValidationInstance make_validation_instance(const ValidationOptions& options, std::size_t index);

/// Oracle equivalence plus tableau invariants on small random instances.
ValidationReport run_validation(const ValidationOptions& options = {});

/// |A| - k + rank + 1: the mutation used to prove the suite has teeth.
int mutated_entropy(const StabilizerState& state, const QubitSet& a);

}  // namespace infoflow

#endif
