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

#ifndef INFOFLOW_PERSIST_HPP
#define INFOFLOW_PERSIST_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "infoflow/experiment.hpp"

namespace infoflow {

inline constexpr int kResultsFormatVersion = 1;
inline constexpr const char* kResultsCsvHeader =
    "observable,N,s16,m16,l16,selection,t,tau,mean,variance,stderr,n_samples";
inline constexpr const char* kResultsCsvName = "results.csv";
inline constexpr const char* kManifestName = "manifest.json";

class PersistError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// "<version>+<git revision>" of this build.
std::string code_version();

struct LoadedResults {
    SweepResult result;
    std::string code_version;
    std::vector<std::string> warnings;
};

/// Shortest round-trip decimal form of `x`.
std::string format_double(double x);
std::string hash_hex(std::uint64_t hash);
/// "# config_hash=... layer_convention=... cnot_orientation=...", first line of every CSV.
std::string provenance_comment(const SweepConfig& config);

std::string results_csv(const SweepResult& result);
std::string manifest_json(const SweepResult& result, const std::string& version);

/// Writes `dir/results.csv` and `dir/manifest.json`. The manifest carries the
/// config, conventions, source version and the exact integer accumulators.
void persist(const SweepResult& result, const std::filesystem::path& dir, const std::string& version = code_version());

/// Reads `dir/manifest.json` back. Statistics are recomputed from the stored
/// integer sums, so persist(load(d)) reproduces the files byte for byte.
/// Throws PersistError on a malformed file or format-version mismatch.
LoadedResults load(const std::filesystem::path& dir);

/// Parses a results CSV (statistics only, no accumulators). Throws PersistError
/// on a wrong header or malformed row.
std::vector<TimeSeries> read_results_csv(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace infoflow

#endif
