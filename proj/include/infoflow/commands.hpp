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

#ifndef INFOFLOW_COMMANDS_HPP
#define INFOFLOW_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "infoflow/analysis.hpp"

namespace infoflow::cli {

/// Process exit codes. Stable: scripts depend on them.
enum ExitCode : int {
    kExitOk = 0,
    /// validate found a mismatch, or a requested check did not hold.
    kExitCheckFailed = 1,
    /// Bad config file, bad override or bad command-line value.
    kExitInvalidConfig = 2,
    /// Missing input, unreadable or unwritable file.
    kExitIo = 3,
    /// Inputs readable but unusable: malformed, mixed conventions, too few sizes.
    kExitBadInput = 4,
};

namespace fs = std::filesystem;

struct RunOptions {
    fs::path config;
    fs::path out;
    std::vector<std::string> overrides;
    int threads = 0;
    bool quiet = false;
};

struct InputOptions {
    std::vector<fs::path> inputs;
    std::string observable = "holevo";
    /// Accept inputs whose conventions differ from each other or from this build.
    bool force = false;
};

struct AnalyzeOptions : InputOptions {
    fs::path out;
    /// Explicit kink windows; empty selects windows around light-cone guesses.
    std::vector<std::pair<double, double>> windows;
    double v0_guess = 0.2;
    double half_width = 0.15;
    std::size_t smoothing = 1;
    double min_significance = 8.0;
};

struct CollapseOptions : InputOptions {
    fs::path out;
    analysis::CollapseSearch search;
    std::size_t smoothing = 1;
    /// Collapse dh/dtau (default) or h itself.
    bool use_derivative = true;
    std::vector<double> compare_nu;
    int threads = 0;
};

struct FitOptions : InputOptions {
    fs::path out;
    /// "velocity" or "power".
    std::string kind = "velocity";
    analysis::VelocityLaw law = analysis::VelocityLaw::tau_e;
    /// (distance, tau*) for velocity, (N, y) for power.
    std::vector<std::pair<double, double>> points;
    /// analysis.json files supplying kink positions for velocity fits.
    std::vector<fs::path> analyses;
    double tau = 0.2;
    /// "sigma" or "mean" for power fits over results directories.
    std::string quantity = "sigma";
};

struct ReportOptions {
    std::vector<fs::path> inputs;
    std::vector<fs::path> artifacts;
    fs::path out;
};

struct ValidateOptions {
    std::size_t instances = 200;
    std::uint64_t seed = 0x5eed0ac1e;
    fs::path out;
};

int run(const RunOptions& o, std::ostream& out, std::ostream& err);
int analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err);
int collapse(const CollapseOptions& o, std::ostream& out, std::ostream& err);
int fit(const FitOptions& o, std::ostream& out, std::ostream& err);
int report(const ReportOptions& o, std::ostream& out, std::ostream& err);
int validate(const ValidateOptions& o, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches; returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a:b" into a pair of doubles; throws std::invalid_argument.
std::pair<double, double> parse_pair(const std::string& text);

}  // namespace infoflow::cli

#endif
