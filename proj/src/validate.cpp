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

#include "infoflow/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "infoflow/circuit.hpp"
#include "infoflow/geometry.hpp"
#include "infoflow/measures.hpp"
#include "infoflow/oracle.hpp"
#include "infoflow/rng.hpp"

namespace infoflow {

namespace {

constexpr std::uint64_t kInstanceTag = 0x76616c6964ULL;

QubitSet draw_set(std::size_t n, std::size_t size, bool random, CoinStream& coins) {
    if (random) {
        return random_subset(n, size, coins);
    }
    return QubitSet::ring_interval(n, static_cast<long long>(coins.below(n)), size);
}

class Suite {
   public:
    explicit Suite(std::vector<std::string> names) {
        for (auto& name : names) {
            ValidationCheck c;
            c.name = std::move(name);
            checks_.push_back(std::move(c));
        }
    }

    void record(std::size_t idx, double error, double tol, const ValidationInstance& inst, const std::string& what) {
        ValidationCheck& c = checks_[idx];
        c.cases++;
        c.max_error = std::max(c.max_error, error);
        if (!(error <= tol)) {
            if (c.failures++ == 0) {
                std::ostringstream os;
                os << inst.describe() << ": " << what << " error " << error;
                c.first_failure = os.str();
            }
        }
    }

    std::vector<ValidationCheck> take() { return std::move(checks_); }

   private:
    std::vector<ValidationCheck> checks_;
};

enum CheckId {
    kEntropyPure,
    kEntropyMixed,
    kHolevo,
    kMixtureIdentity,
    kEqualEntropy,
    kUnitarity,
    kPureEntropy,
    kTableauInvariants,
    kCoherentIdentity,
};

}  // namespace

std::string ValidationInstance::describe() const {
    std::ostringstream os;
    os << "N=" << n << " t=" << depth << " seed=" << circuit_seed << " S=" << source.to_string()
       << " M=" << measure.to_string() << (random_sets ? " (random)" : " (consecutive)");
    return os.str();
}

ValidationInstance make_validation_instance(const ValidationOptions& options, std::size_t index) {
    if (options.min_qubits < 2 || options.min_qubits % 2 != 0 || options.max_qubits < options.min_qubits ||
        options.max_qubits > oracle::kMaxQubits) {
        throw std::invalid_argument("validation: qubit range must be even and within the oracle cap");
    }
    CoinStream coins(derive_seed({options.seed, kInstanceTag, index}));
    ValidationInstance inst;
    inst.n = options.min_qubits + 2 * coins.below((options.max_qubits - options.min_qubits) / 2 + 1);
    inst.depth = coins.below(options.max_depth + 1);
    inst.circuit_seed = derive_seed({options.seed, index});
    inst.random_sets = coins.flip();
    const std::size_t s_max = std::min(inst.n, oracle::kMaxSourceQubits);
    const std::size_t s_size = 1 + coins.below(s_max);
    const std::size_t m_size = coins.below(inst.n + 1);
    inst.source = draw_set(inst.n, s_size, inst.random_sets, coins);
    inst.measure = draw_set(inst.n, m_size, inst.random_sets, coins);
    return inst;
}

int mutated_entropy(const StabilizerState& state, const QubitSet& a) { return state.subsystem_entropy_direct(a) + 1; }

bool ValidationReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed() ? "PASS " : "FAIL ") << c.name << "  cases=" << c.cases << " failures=" << c.failures
           << " max_error=" << c.max_error << "\n";
        if (!c.first_failure.empty()) {
            os << "     first failure: " << c.first_failure << "\n";
        }
    }
    os << (passed() ? "validation passed" : "validation FAILED") << " in " << seconds << " s\n";
    return os.str();
}

ValidationReport run_validation(const ValidationOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const EntropyFunction entropy =
        options.entropy ? options.entropy
                        : EntropyFunction([](const StabilizerState& s, const QubitSet& a) { return s.subsystem_entropy(a); });
    Suite suite({"entropy_pure_vs_dense", "entropy_mixed_vs_dense", "holevo_vs_direct", "mixture_identity",
                 "equal_entropy_lemma", "unitarity", "pure_state_entropy", "tableau_invariants",
                 "coherent_identity"});
    const double tol = options.tolerance;

    for (std::size_t i = 0; i < options.instances; i++) {
        const ValidationInstance inst = make_validation_instance(options, i);
        const std::size_t n = inst.n;
        CircuitParams params{n, inst.depth, inst.circuit_seed};
        const std::vector<Layer> circuit = build_circuit(params);

        StabilizerState pure = StabilizerState::basis_state(n);
        StabilizerState mixed = StabilizerState::mixed_source(n, inst.source);
        apply_circuit(pure, std::span<const Layer>(circuit));
        apply_circuit(mixed, std::span<const Layer>(circuit));
        oracle::DenseState dpure = oracle::DenseState::basis(n);
        oracle::DenseState dmixed = oracle::DenseState::mixed_source(n, inst.source);
        apply_circuit(dpure, std::span<const Layer>(circuit));
        apply_circuit(dmixed, std::span<const Layer>(circuit));

        // Cuts: M, S, and a random extra subset.
        CoinStream coins(derive_seed({options.seed, kInstanceTag, i, 1}));
        const QubitSet extra = random_subset(n, coins.below(n + 1), coins);
        for (const QubitSet* cut : {&inst.measure, &inst.source, &extra}) {
            suite.record(kEntropyPure, std::abs(entropy(pure, *cut) - oracle::dense_entropy(dpure, *cut)), tol, inst,
                         "pure S(" + cut->to_string() + ")");
            suite.record(kEntropyMixed, std::abs(entropy(mixed, *cut) - oracle::dense_entropy(dmixed, *cut)), tol,
                         inst, "mixed S(" + cut->to_string() + ")");
        }

        const double direct = oracle::direct_holevo(circuit, inst.source, inst.measure);
        suite.record(kHolevo, std::abs(holevo_bits(pure, mixed, inst.measure) - direct), tol, inst, "holevo");

        // Shortcut ingredients: the ensemble averages to the mixed state and
        // every member carries the same entropy on M.
        if (!inst.measure.empty()) {
            const auto members = oracle::ensemble_reduced_states(circuit, inst.source, inst.measure);
            Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(members.front().rows(), members.front().cols());
            for (const auto& rho : members) {
                avg += rho / static_cast<double>(members.size());
            }
            const Eigen::MatrixXcd target = dmixed.reduced_density(inst.measure);
            suite.record(kMixtureIdentity, (avg - target).cwiseAbs().maxCoeff(), 1e-12, inst, "ensemble average");
            const auto entropies = oracle::ensemble_entropies(circuit, inst.source, inst.measure);
            const auto [lo, hi] = std::minmax_element(entropies.begin(), entropies.end());
            suite.record(kEqualEntropy, *hi - *lo, tol, inst, "member entropies");
        }

        std::size_t gates = 0;
        for (const Layer& layer : circuit) {
            gates += 3 * layer.size();
        }
        suite.record(kUnitarity, dpure.normalization_error(), 1e-12 * static_cast<double>(std::max<std::size_t>(gates, 1)),
                     inst, "norm");
        suite.record(kUnitarity, dmixed.normalization_error(),
                     1e-12 * static_cast<double>(std::max<std::size_t>(gates, 1)), inst, "trace");

        const QubitSet all = QubitSet::all(n);
        suite.record(kPureEntropy, std::abs(entropy(pure, all)), 0.0, inst, "S(all) of pure state");
        suite.record(kPureEntropy, std::abs(entropy(pure, extra) - entropy(pure, extra.complement())), 0.0, inst,
                     "S(A) - S(complement) of pure state");
        suite.record(kPureEntropy,
                     std::abs(entropy(mixed, all) - static_cast<double>(inst.source.size())), 0.0, inst,
                     "S(all) of mixed state");

        const bool ok = !pure.invariant_violation() && !mixed.invariant_violation();
        suite.record(kTableauInvariants, ok ? 0.0 : 1.0, 0.0, inst, "rank/commutation");

        const QubitSet env = inst.measure.complement();
        const int hm = holevo_bits(pure, mixed, inst.measure);
        const int he = holevo_bits(pure, mixed, env);
        const int c = coherent_bits(mixed, inst.measure);
        suite.record(kCoherentIdentity, std::abs(c - (hm - he)), 0.0, inst, "C = H_M - H_E");
        suite.record(kCoherentIdentity, std::abs(c + coherent_bits(mixed, env)), 0.0, inst, "C_M = -C_E");
        suite.record(kCoherentIdentity, std::abs(c - private_info_bits(pure, mixed, inst.measure)), 0.0, inst,
                     "private information");
    }

    ValidationReport report;
    report.checks = suite.take();

    if (options.mutation_check && !options.entropy) {
        ValidationOptions mutant = options;
        mutant.instances = std::min<std::size_t>(options.instances, 10);
        mutant.entropy = mutated_entropy;
        mutant.mutation_check = false;
        const ValidationReport broken = run_validation(mutant);
        ValidationCheck c;
        c.name = "mutation_detected";
        c.cases = 1;
        if (broken.passed()) {
            c.failures = 1;
            c.first_failure = "off-by-one rank term passed the suite";
        }
        report.checks.push_back(c);
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace infoflow
