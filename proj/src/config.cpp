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

#include "infoflow/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "infoflow/rng.hpp"

namespace infoflow {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view s) {
    s = trim(s);
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("config key '" + std::string(key) + "': expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> parse_array(std::string_view key, std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw ConfigError("config key '" + std::string(key) + "': expected an array like [a, b]");
    }
    s = trim(s.substr(1, s.size() - 2));
    std::vector<std::string_view> out;
    if (s.empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string_view item = trim(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (item.empty()) {
            throw ConfigError("config key '" + std::string(key) + "': empty array element");
        }
        out.push_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

template <typename Int>
std::vector<Int> parse_int_array(std::string_view key, std::string_view s) {
    std::vector<Int> out;
    for (auto item : parse_array(key, s)) {
        out.push_back(parse_int<Int>(key, item));
    }
    return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); i++) {
        s += (i ? ", " : "") + std::to_string(v[i]);
    }
    return s + "]";
}

using KeyValues = std::map<std::string, std::string, std::less<>>;

void add_line(KeyValues& kv, std::string_view line, bool allow_replace, std::size_t line_no) {
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
        return;
    }
    std::size_t eq = line.find('=');
    std::string where = line_no ? " (line " + std::to_string(line_no) + ")" : "";
    if (eq == std::string_view::npos) {
        throw ConfigError("config: expected 'key = value'" + where + ": '" + std::string(line) + "'");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
        throw ConfigError("config: empty key" + where);
    }
    if (!allow_replace && kv.count(key)) {
        throw ConfigError("config: duplicate key '" + key + "'" + where);
    }
    kv[key] = value;
}

const std::vector<std::string_view> kKnownKeys = {
    "n_values",        "s16",           "m16",           "l16",           "selection",        "source_qubits",
    "measure_qubits",  "observables",   "max_tau",       "record_stride", "n_samples",        "master_seed",
    "cnot_orientation", "layer_convention",
};

}  // namespace

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    Rational r;
    std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        r.num = parse_int<std::int64_t>("max_tau", text.substr(0, slash));
        r.den = parse_int<std::int64_t>("max_tau", text.substr(slash + 1));
    } else {
        std::size_t dot = text.find('.');
        if (dot == std::string_view::npos) {
            r.num = parse_int<std::int64_t>("max_tau", text);
        } else {
            std::string digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
            std::size_t frac = text.size() - dot - 1;
            if (frac > 12) {
                throw ConfigError("max_tau: too many decimal places");
            }
            r.num = parse_int<std::int64_t>("max_tau", digits);
            r.den = 1;
            for (std::size_t i = 0; i < frac; i++) {
                r.den *= 10;
            }
        }
    }
    if (r.den <= 0 || r.num < 0) {
        throw ConfigError("max_tau must be a non-negative rational");
    }
    std::int64_t g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

std::size_t Rational::floor_times(std::size_t n) const {
    return static_cast<std::size_t>((static_cast<__int128>(num) * static_cast<__int128>(n)) / den);
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(Observable o) {
    switch (o) {
        case Observable::holevo:
            return "holevo";
        case Observable::coherent:
            return "coherent";
        case Observable::private_check:
            return "private_check";
    }
    return "?";
}

std::string_view series_id(Observable o) { return o == Observable::private_check ? "private" : to_string(o); }

Observable parse_observable(std::string_view s) {
    if (s == "holevo") {
        return Observable::holevo;
    }
    if (s == "coherent") {
        return Observable::coherent;
    }
    if (s == "private_check" || s == "private") {
        return Observable::private_check;
    }
    throw ConfigError("unknown observable '" + std::string(s) + "'");
}

bool SweepConfig::has(Observable o) const {
    return std::find(observables.begin(), observables.end(), o) != observables.end();
}

void SweepConfig::validate() const {
    if (n_values.empty()) {
        throw ConfigError("config: n_values is empty");
    }
    if (observables.empty()) {
        throw ConfigError("config: no observables requested");
    }
    if (n_samples < 2) {
        throw ConfigError("config: n_samples must be at least 2 (variance needs two samples)");
    }
    if (record_stride && *record_stride == 0) {
        throw ConfigError("config: record_stride must be positive");
    }
    if (source_qubits.has_value() != measure_qubits.has_value()) {
        throw ConfigError("config: source_qubits and measure_qubits must be given together");
    }
    if (explicit_sets() && n_values.size() != 1) {
        throw ConfigError("config: explicit qubit sets need exactly one N");
    }
    try {
        geometry.validate();
        for (std::size_t n : n_values) {
            CircuitParams{n, 0, 0, cnot_orientation, layer_convention}.validate();
            if (explicit_sets()) {
                QubitSet(n, *source_qubits);
                QubitSet(n, *measure_qubits);
            } else if (n % 16 != 0) {
                throw ConfigError("config: N=" + std::to_string(n) + " is not a multiple of 16");
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

std::size_t SweepConfig::stride_for(std::size_t n) const {
    if (record_stride) {
        return *record_stride;
    }
    return n <= 128 ? 1 : std::max<std::size_t>(1, n / 128);
}

std::vector<std::size_t> SweepConfig::record_layers(std::size_t n) const {
    const std::size_t t_max = max_layers(n);
    const std::size_t stride = stride_for(n);
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t <= t_max; t += stride) {
        out.push_back(t);
    }
    if (out.back() != t_max) {
        out.push_back(t_max);
    }
    return out;
}

std::string SweepConfig::selection_label() const {
    return explicit_sets() ? "explicit" : geometry.selection_label();
}

std::uint64_t SweepConfig::geometry_id() const {
    if (!explicit_sets()) {
        return geometry.id();
    }
    return fnv1a64("explicit;S=" + join_sizes(*source_qubits) + ";M=" + join_sizes(*measure_qubits));
}

std::string SweepConfig::to_text() const {
    std::ostringstream out;
    out << "n_values = " << join_sizes(n_values) << "\n";
    if (explicit_sets()) {
        out << "source_qubits = " << join_sizes(*source_qubits) << "\n";
        out << "measure_qubits = " << join_sizes(*measure_qubits) << "\n";
    } else {
        out << "s16 = " << geometry.s16 << "\n";
        out << "m16 = " << geometry.m16 << "\n";
        out << "l16 = " << geometry.l16 << "\n";
        out << "selection = " << geometry.selection_label() << "\n";
    }
    out << "observables = [";
    for (std::size_t i = 0; i < observables.size(); i++) {
        out << (i ? ", " : "") << to_string(observables[i]);
    }
    out << "]\n";
    out << "max_tau = " << max_tau.to_string() << "\n";
    out << "record_stride = " << (record_stride ? std::to_string(*record_stride) : "auto") << "\n";
    out << "n_samples = " << n_samples << "\n";
    out << "master_seed = " << master_seed << "\n";
    out << "cnot_orientation = " << to_string(cnot_orientation) << "\n";
    out << "layer_convention = " << to_string(layer_convention) << "\n";
    return out.str();
}

std::uint64_t SweepConfig::hash() const { return fnv1a64(to_text()); }

SweepConfig parse_sweep_config(std::string_view text, std::span<const std::string> overrides) {
    KeyValues kv;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        add_line(kv, line, false, ++line_no);
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    for (const std::string& o : overrides) {
        add_line(kv, o, true, 0);
    }
    for (const auto& [key, value] : kv) {
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }

    SweepConfig c;
    auto get = [&](std::string_view key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto require = [&](std::string_view key) -> const std::string& {
        const std::string* v = get(key);
        if (!v) {
            throw ConfigError("config: missing required key '" + std::string(key) + "'");
        }
        return *v;
    };

    c.n_values = parse_int_array<std::size_t>("n_values", require("n_values"));
    if (get("source_qubits") || get("measure_qubits")) {
        for (auto key : {"s16", "m16", "l16", "selection"}) {
            if (get(key)) {
                throw ConfigError(std::string("config: '") + key + "' conflicts with explicit qubit sets");
            }
        }
        c.source_qubits = parse_int_array<std::size_t>("source_qubits", require("source_qubits"));
        c.measure_qubits = parse_int_array<std::size_t>("measure_qubits", require("measure_qubits"));
    } else {
        c.geometry.s16 = parse_int<int>("s16", require("s16"));
        c.geometry.m16 = parse_int<int>("m16", require("m16"));
        c.geometry.l16 = parse_int<int>("l16", require("l16"));
        if (const std::string* sel = get("selection")) {
            try {
                c.geometry.source_selection = parse_selection_label(*sel, &c.geometry.measure_selection);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config: ") + e.what());
            }
        }
    }
    if (const std::string* obs = get("observables")) {
        c.observables.clear();
        for (auto item : parse_array("observables", *obs)) {
            Observable o = parse_observable(item);
            if (!c.has(o)) {
                c.observables.push_back(o);
            }
        }
    }
    c.max_tau = Rational::parse(require("max_tau"));
    if (const std::string* stride = get("record_stride")) {
        if (*stride != "auto") {
            c.record_stride = parse_int<std::size_t>("record_stride", *stride);
        }
    }
    c.n_samples = parse_int<std::size_t>("n_samples", require("n_samples"));
    c.master_seed = parse_int<std::uint64_t>("master_seed", require("master_seed"));
    try {
        if (const std::string* o = get("cnot_orientation")) {
            c.cnot_orientation = parse_cnot_orientation(*o);
        }
        if (const std::string* l = get("layer_convention")) {
            c.layer_convention = parse_layer_convention(*l);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

SweepConfig load_sweep_config(const std::filesystem::path& path, std::span<const std::string> overrides) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str(), overrides);
}

}  // namespace infoflow
