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

#include "infoflow/persist.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace infoflow {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw PersistError("results csv: bad number '" + s + "'");
    }
    return v;
}

long long parse_ll(const std::string& s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw PersistError("results csv: bad integer '" + s + "'");
    }
    return v;
}

}  // namespace

std::string code_version() { return std::string(INFOFLOW_VERSION) + "+" + INFOFLOW_GIT_REV; }

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string hash_hex(std::uint64_t hash) { return hex64(hash); }

std::string provenance_comment(const SweepConfig& config) {
    return "# config_hash=" + hex64(config.hash()) + " layer_convention=" +
           std::string(to_string(config.layer_convention)) +
           " cnot_orientation=" + std::string(to_string(config.cnot_orientation));
}

std::string results_csv(const SweepResult& result) {
    std::ostringstream out;
    out << provenance_comment(result.config) << "\n" << kResultsCsvHeader << "\n";
    const bool expl = result.config.explicit_sets();
    for (const TimeSeries& ts : result.series) {
        std::string geo = expl ? "NA,NA,NA"
                               : std::to_string(ts.geometry.s16) + "," + std::to_string(ts.geometry.m16) + "," +
                                     std::to_string(ts.geometry.l16);
        for (std::size_t i = 0; i < ts.layers.size(); i++) {
            out << ts.observable << "," << ts.n << "," << geo << "," << ts.selection << "," << ts.layers[i] << ","
                << format_double(ts.tau[i]) << "," << format_double(ts.mean[i]) << "," << format_double(ts.variance[i])
                << "," << format_double(ts.std_error[i]) << "," << ts.n_samples << "\n";
        }
    }
    return out.str();
}

std::string manifest_json(const SweepResult& result, const std::string& version) {
    const SweepConfig& c = result.config;
    json j;
    j["format"] = "infoflow-results";
    j["format_version"] = kResultsFormatVersion;
    j["code_version"] = version;
    j["config_text"] = c.to_text();
    j["config_hash"] = hex64(c.hash());
    j["master_seed"] = c.master_seed;
    j["conventions"] = {
        {"layer_convention", std::string(to_string(c.layer_convention))},
        {"cnot_orientation", std::string(to_string(c.cnot_orientation))},
        {"sampling", "trajectory_per_circuit"},
        {"record", "observable after t brick rows; tau = t/N"},
        {"geometry", "M = [0, m16*N/16); right edge of S at l16 sixteenths inside the right edge of M"},
    };
    j["private_mismatches"] = result.private_mismatches;
    json series = json::array();
    for (const TimeSeries& ts : result.series) {
        series.push_back({{"observable", ts.observable},
                          {"N", ts.n},
                          {"selection", ts.selection},
                          {"layers", ts.layers},
                          {"n_samples", ts.n_samples},
                          {"sum", ts.sum},
                          {"sum_sq", ts.sum_sq}});
    }
    j["series"] = std::move(series);
    return j.dump(1) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw PersistError("cannot open '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw PersistError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw PersistError("write failed for '" + path.string() + "'");
    }
}

void persist(const SweepResult& result, const std::filesystem::path& dir, const std::string& version) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw PersistError("cannot create '" + dir.string() + "': " + ec.message());
    }
    write_text_file(dir / kResultsCsvName, results_csv(result));
    write_text_file(dir / kManifestName, manifest_json(result, version));
}

LoadedResults load(const std::filesystem::path& dir) {
    std::string text = read_text_file(dir / kManifestName);
    LoadedResults out;
    try {
        json j = json::parse(text);
        if (j.at("format").get<std::string>() != "infoflow-results") {
            throw PersistError("manifest: not an infoflow results file");
        }
        int version = j.at("format_version").get<int>();
        if (version != kResultsFormatVersion) {
            throw PersistError("manifest: format version " + std::to_string(version) + " is not supported (expected " +
                               std::to_string(kResultsFormatVersion) + ")");
        }
        out.code_version = j.at("code_version").get<std::string>();
        SweepConfig config = parse_sweep_config(j.at("config_text").get<std::string>());
        std::string stored_layer = j.at("conventions").at("layer_convention").get<std::string>();
        if (stored_layer != to_string(config.layer_convention) ||
            stored_layer != to_string(LayerConvention::single_row)) {
            out.warnings.push_back("layer convention '" + stored_layer + "' differs from this build's '" +
                                   std::string(to_string(LayerConvention::single_row)) + "'");
        }
        std::string stored_cnot = j.at("conventions").at("cnot_orientation").get<std::string>();
        if (stored_cnot != to_string(config.cnot_orientation)) {
            out.warnings.push_back("manifest cnot_orientation '" + stored_cnot + "' disagrees with its config");
        }
        if (out.code_version != code_version()) {
            out.warnings.push_back("results written by " + out.code_version + ", this build is " + code_version());
        }
        out.result.config = config;
        out.result.private_mismatches = j.at("private_mismatches").get<std::size_t>();
        for (const json& s : j.at("series")) {
            SeriesAccumulator acc;
            acc.sum = s.at("sum").get<std::vector<std::int64_t>>();
            acc.sum_sq = s.at("sum_sq").get<std::vector<std::int64_t>>();
            acc.count = s.at("n_samples").get<std::int64_t>();
            auto layers = s.at("layers").get<std::vector<std::size_t>>();
            out.result.series.push_back(aggregate(s.at("observable").get<std::string>(), s.at("N").get<std::size_t>(),
                                                  config.geometry, s.at("selection").get<std::string>(), layers, acc));
        }
    } catch (const PersistError&) {
        throw;
    } catch (const std::exception& e) {
        throw PersistError("malformed manifest '" + (dir / kManifestName).string() + "': " + e.what());
    }
    return out;
}

std::vector<TimeSeries> read_results_csv(const std::filesystem::path& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    std::size_t line_no = 0;
    do {
        line_no++;
        if (!std::getline(in, line)) {
            throw PersistError("results csv '" + path.string() + "' is empty");
        }
    } while (!line.empty() && line[0] == '#');
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kResultsCsvHeader) {
        throw PersistError("results csv '" + path.string() + "': unexpected header '" + line + "'");
    }
    std::vector<TimeSeries> out;
    std::map<std::pair<std::string, std::size_t>, std::size_t> index;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        auto f = split_csv_line(line);
        if (f.size() != 12) {
            throw PersistError("results csv line " + std::to_string(line_no) + ": expected 12 columns, got " +
                               std::to_string(f.size()));
        }
        std::size_t n = static_cast<std::size_t>(parse_ll(f[1]));
        auto key = std::make_pair(f[0], n);
        auto it = index.find(key);
        if (it == index.end()) {
            TimeSeries ts;
            ts.observable = f[0];
            ts.n = n;
            if (f[2] != "NA") {
                ts.geometry.s16 = static_cast<int>(parse_ll(f[2]));
                ts.geometry.m16 = static_cast<int>(parse_ll(f[3]));
                ts.geometry.l16 = static_cast<int>(parse_ll(f[4]));
            }
            ts.selection = f[5];
            ts.n_samples = parse_ll(f[11]);
            it = index.emplace(key, out.size()).first;
            out.push_back(std::move(ts));
        }
        TimeSeries& ts = out[it->second];
        ts.layers.push_back(static_cast<std::size_t>(parse_ll(f[6])));
        ts.tau.push_back(parse_double(f[7]));
        ts.mean.push_back(parse_double(f[8]));
        ts.variance.push_back(parse_double(f[9]));
        ts.std_error.push_back(parse_double(f[10]));
    }
    return out;
}

}  // namespace infoflow
