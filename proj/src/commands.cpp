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

#include "infoflow/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "infoflow/collapse_detail.hpp"
#include "infoflow/config.hpp"
#include "infoflow/experiment.hpp"
#include "infoflow/persist.hpp"
#include "infoflow/validate.hpp"
#include "json.hpp"

namespace infoflow::cli {

using nlohmann::json;

namespace {

// Thrown inside a command to leave with a specific exit code.
struct Exit {
    int code;
    std::string message;
};

struct Loaded {
    fs::path dir;
    LoadedResults res;
};

struct SeriesRef {
    const TimeSeries* series;
    const Loaded* source;
};

std::string num(double x) { return std::isfinite(x) ? format_double(x) : "nan"; }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<Loaded> load_inputs(const InputOptions& o, std::ostream& err) {
    if (o.inputs.empty()) {
        throw Exit{kExitInvalidConfig, "no --input directories given"};
    }
    std::vector<Loaded> out;
    for (const fs::path& dir : o.inputs) {
        if (!fs::exists(dir / kManifestName)) {
            throw Exit{kExitIo, "no " + std::string(kManifestName) + " in '" + dir.string() + "'"};
        }
        try {
            out.push_back({dir, load(dir)});
        } catch (const PersistError& e) {
            throw Exit{kExitBadInput, e.what()};
        }
    }
    bool mixed = false;
    for (const Loaded& l : out) {
        for (const std::string& w : l.res.warnings) {
            err << "warning: " << l.dir.string() << ": " << w << "\n";
            mixed |= w.find("layer convention") != std::string::npos;
        }
        const SweepConfig& a = out.front().res.result.config;
        const SweepConfig& b = l.res.result.config;
        if (a.layer_convention != b.layer_convention || a.cnot_orientation != b.cnot_orientation) {
            err << "warning: " << l.dir.string() << " uses different conventions from " << out.front().dir.string()
                << "\n";
            mixed = true;
        }
    }
    if (mixed && !o.force) {
        throw Exit{kExitBadInput, "inputs mix conventions; rerun with --force to combine them anyway"};
    }
    return out;
}

json sources_json(const std::vector<Loaded>& loaded) {
    json arr = json::array();
    for (const Loaded& l : loaded) {
        const SweepConfig& c = l.res.result.config;
        arr.push_back({{"dir", l.dir.string()},
                       {"config_hash", hash_hex(c.hash())},
                       {"code_version", l.res.code_version},
                       {"layer_convention", std::string(to_string(c.layer_convention))},
                       {"cnot_orientation", std::string(to_string(c.cnot_orientation))}});
    }
    return arr;
}

std::string provenance(const std::vector<Loaded>& loaded) {
    std::string s;
    for (const Loaded& l : loaded) {
        s += provenance_comment(l.res.result.config) + "\n";
    }
    return s;
}

std::vector<SeriesRef> select_series(const std::vector<Loaded>& loaded, const std::string& observable) {
    std::vector<SeriesRef> out;
    for (const Loaded& l : loaded) {
        for (const TimeSeries& ts : l.res.result.series) {
            if (ts.observable == observable) {
                out.push_back({&ts, &l});
            }
        }
    }
    if (out.empty()) {
        throw Exit{kExitBadInput, "no '" + observable + "' series in the inputs"};
    }
    std::stable_sort(out.begin(), out.end(), [](const SeriesRef& a, const SeriesRef& b) {
        const std::string ga = a.series->geometry.descriptor() + a.series->selection;
        const std::string gb = b.series->geometry.descriptor() + b.series->selection;
        return ga != gb ? ga < gb : a.series->n < b.series->n;
    });
    return out;
}

json geometry_json(const SeriesRef& r) {
    const SweepConfig& c = r.source->res.result.config;
    if (c.explicit_sets()) {
        return {{"explicit", true}};
    }
    const GeometrySpec& g = r.series->geometry;
    json j = {{"s16", g.s16}, {"m16", g.m16}, {"l16", g.l16}, {"selection", r.series->selection}};
    auto d = g.min_distance16();
    j["distance16"] = d ? json(*d) : json(nullptr);
    return j;
}

void write_outputs(const fs::path& dir, const std::vector<std::pair<std::string, std::string>>& files,
                   std::ostream& out) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Exit{kExitIo, "cannot create '" + dir.string() + "': " + ec.message()};
    }
    for (const auto& [name, text] : files) {
        try {
            write_text_file(dir / name, text);
        } catch (const PersistError& e) {
            throw Exit{kExitIo, e.what()};
        }
        out << "wrote " << (dir / name).string() << "\n";
    }
}

std::vector<double> curve_values(const TimeSeries& ts, bool use_derivative, std::size_t smoothing) {
    if (!use_derivative) {
        return ts.mean;
    }
    return analysis::derivative(ts.tau, ts.mean, smoothing).value;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const Exit& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const PersistError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const analysis::AnalysisError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
}

}  // namespace

std::pair<double, double> parse_pair(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("expected 'a:b', got '" + text + "'");
    }
    auto one = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw std::invalid_argument("bad number '" + s + "' in '" + text + "'");
        }
        return v;
    };
    return {one(text.substr(0, colon)), one(text.substr(colon + 1))};
}

int run(const RunOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!fs::exists(o.config)) {
            throw Exit{kExitInvalidConfig, "config '" + o.config.string() + "' does not exist"};
        }
        SweepConfig config;
        try {
            config = load_sweep_config(o.config, o.overrides);
        } catch (const PersistError& e) {
            throw Exit{kExitIo, e.what()};
        }
        if (!o.quiet) {
            err << "running " << config.n_samples << " samples per size over N =";
            for (std::size_t n : config.n_values) {
                err << " " << n;
            }
            err << " (" << config.geometry.descriptor() << ")\n";
        }
        const SweepResult result = run_sweep(config, o.threads);
        try {
            persist(result, o.out);
        } catch (const PersistError& e) {
            throw Exit{kExitIo, e.what()};
        }
        out << "wrote " << (o.out / kResultsCsvName).string() << " and " << (o.out / kManifestName).string() << "\n";
        if (result.private_mismatches != 0) {
            err << "warning: " << result.private_mismatches << " records broke C = H_M - H_E\n";
        }
        return static_cast<int>(kExitOk);
    });
}

int analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_inputs(o, err);
        const auto refs = select_series(loaded, o.observable);
        analysis::KinkOptions kopts;
        kopts.min_significance = o.min_significance;

        std::ostringstream raw, deriv, kinks;
        const std::string prov = provenance(loaded);
        raw << prov << "observable,N,selection,t,tau,mean,stderr\n";
        deriv << prov << "observable,N,selection,tau,derivative\n";
        kinks << prov << "observable,N,selection,name,tau_lo,tau_hi,tau_star,jump,significance,present\n";

        json series = json::array();
        for (const SeriesRef& r : refs) {
            const TimeSeries& ts = *r.series;
            for (std::size_t i = 0; i < ts.tau.size(); i++) {
                raw << ts.observable << "," << ts.n << "," << ts.selection << "," << ts.layers[i] << ","
                    << num(ts.tau[i]) << "," << num(ts.mean[i]) << "," << num(ts.std_error[i]) << "\n";
            }
            const analysis::Curve d = analysis::derivative(ts.tau, ts.mean, o.smoothing);
            for (std::size_t i = 0; i < d.tau.size(); i++) {
                deriv << ts.observable << "," << ts.n << "," << ts.selection << "," << num(d.tau[i]) << ","
                      << num(d.value[i]) << "\n";
            }

            std::vector<std::string> names;
            std::vector<std::pair<double, double>> windows = o.windows;
            if (windows.empty() && !r.source->res.result.config.explicit_sets() &&
                ts.geometry.measure_selection == Selection::consecutive) {
                std::optional<double> distance;
                if (auto d16 = ts.geometry.min_distance16()) {
                    distance = *d16 / 16.0;
                }
                const auto guesses = analysis::theory_kink_guesses(ts.geometry.m16 / 16.0, distance, o.v0_guess);
                windows = analysis::guess_windows(guesses, o.half_width);
                for (const auto& g : guesses) {
                    names.push_back(g.name);
                }
            }
            json jk = json::array();
            for (std::size_t w = 0; w < windows.size(); w++) {
                const std::string name = w < names.size() ? names[w] : "window" + std::to_string(w);
                json k = {{"name", name}, {"window", {windows[w].first, windows[w].second}}};
                try {
                    const auto e = analysis::estimate_kink(ts.tau, ts.mean, windows[w].first, windows[w].second, kopts);
                    k.update({{"tau", e.tau},
                              {"slope_left", e.slope_left},
                              {"slope_right", e.slope_right},
                              {"jump", e.jump},
                              {"jump_stderr", finite_or_null(e.jump_stderr)},
                              {"significance", finite_or_null(e.significance)},
                              {"grid_step", e.grid_step},
                              {"points", e.points},
                              {"present", e.present}});
                    kinks << ts.observable << "," << ts.n << "," << ts.selection << "," << name << ","
                          << num(windows[w].first) << "," << num(windows[w].second) << "," << num(e.tau) << ","
                          << num(e.jump) << "," << num(e.significance) << "," << (e.present ? 1 : 0) << "\n";
                } catch (const analysis::AnalysisError& e) {
                    k["error"] = e.what();
                    k["present"] = false;
                }
                jk.push_back(std::move(k));
            }
            series.push_back({{"observable", ts.observable},
                              {"N", ts.n},
                              {"n_samples", ts.n_samples},
                              {"geometry", geometry_json(r)},
                              {"kinks", std::move(jk)}});
        }
        json report = {{"tool", "analyze"},
                       {"sources", sources_json(loaded)},
                       {"observable", o.observable},
                       {"smoothing", o.smoothing},
                       {"v0_guess", o.v0_guess},
                       {"min_significance", o.min_significance},
                       {"series", std::move(series)}};
        write_outputs(o.out,
                      {{"analysis.json", report.dump(1) + "\n"},
                       {"raw.csv", raw.str()},
                       {"derivative.csv", deriv.str()},
                       {"kinks.csv", kinks.str()}},
                      out);
        return static_cast<int>(kExitOk);
    });
}

int collapse(const CollapseOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto loaded = load_inputs(o, err);
        const auto refs = select_series(loaded, o.observable);
        std::set<std::string> geometries;
        std::set<std::size_t> sizes;
        std::vector<analysis::ScalingCurve> curves;
        for (const SeriesRef& r : refs) {
            geometries.insert(r.series->geometry.descriptor() + "/" + r.series->selection);
            if (!sizes.insert(r.series->n).second) {
                throw Exit{kExitBadInput, "two '" + o.observable + "' series share N=" + std::to_string(r.series->n)};
            }
            curves.push_back({r.series->n, r.series->tau, curve_values(*r.series, o.use_derivative, o.smoothing)});
        }
        if (geometries.size() != 1) {
            throw Exit{kExitBadInput, "collapse needs one geometry across inputs, found " +
                                          std::to_string(geometries.size())};
        }
        if (sizes.size() < 3) {
            throw Exit{kExitBadInput, "collapse needs at least three system sizes"};
        }
        const analysis::ScalingFit f = analysis::optimize_collapse(curves, o.search, o.threads);
        if (f.flat) {
            err << "warning: collapse cost landscape is flat over the grid\n";
        }

        json compare = json::array();
        for (double nu : o.compare_nu) {
            double tc = std::numeric_limits<double>::quiet_NaN();
            double profiled = std::numeric_limits<double>::quiet_NaN();
            try {
                profiled = analysis::profile_cost(curves, o.search, nu, &tc);
            } catch (const analysis::AnalysisError&) {
            }
            double fixed = std::numeric_limits<double>::quiet_NaN();
            try {
                fixed = analysis::collapse_cost(curves, f.tau_c, nu, o.search.half_window);
            } catch (const analysis::AnalysisError&) {
            }
            compare.push_back({{"nu", nu},
                               {"profiled_cost", finite_or_null(profiled)},
                               {"profiled_tau_c", finite_or_null(tc)},
                               {"cost_at_fitted_tau_c", finite_or_null(fixed)}});
        }

        const std::string prov = provenance(loaded);
        std::ostringstream rescaled, master, profile;
        rescaled << prov << "N,tau,x,value,master\n";
        master << prov << "x,master\n";
        for (const auto& p : analysis::rescale_family(curves, f.tau_c, f.nu, o.search.half_window)) {
            rescaled << p.n << "," << num(p.tau) << "," << num(p.x) << "," << num(p.value) << "," << num(p.master)
                     << "\n";
            if (std::isfinite(p.master)) {
                master << num(p.x) << "," << num(p.master) << "\n";
            }
        }
        profile << prov << "nu,cost,tau_c\n";
        for (double nu : analysis::detail::nu_grid(o.search)) {
            double tc = std::numeric_limits<double>::quiet_NaN();
            double c = std::numeric_limits<double>::quiet_NaN();
            try {
                c = analysis::profile_cost(curves, o.search, nu, &tc);
            } catch (const analysis::AnalysisError&) {
            }
            profile << num(nu) << "," << num(c) << "," << num(tc) << "\n";
        }

        json report = {{"tool", "collapse"},
                       {"sources", sources_json(loaded)},
                       {"observable", o.observable},
                       {"quantity", o.use_derivative ? "derivative" : "value"},
                       {"smoothing", o.smoothing},
                       {"geometry", *geometries.begin()},
                       {"fit",
                        {{"tau_c", f.tau_c},
                         {"nu", f.nu},
                         {"cost", f.cost},
                         {"coarse_cost", f.coarse_cost},
                         {"n_values", f.n_values},
                         {"refinement_steps", f.refinement_steps},
                         {"grid_evaluations", f.grid_evaluations},
                         {"flat", f.flat},
                         {"search",
                          {{"tau_lo", o.search.tau_lo},
                           {"tau_hi", o.search.tau_hi},
                           {"tau_step", o.search.tau_step},
                           {"nu_lo", o.search.nu_lo},
                           {"nu_hi", o.search.nu_hi},
                           {"nu_points", o.search.nu_points},
                           {"half_window", o.search.half_window}}}}},
                       {"compare", std::move(compare)}};
        write_outputs(o.out,
                      {{"collapse.json", report.dump(1) + "\n"},
                       {"rescaled.csv", rescaled.str()},
                       {"master.csv", master.str()},
                       {"cost_profile.csv", profile.str()}},
                      out);
        out << "tau_c = " << f.tau_c << "  nu = " << f.nu << "  cost = " << f.cost << "\n";
        return static_cast<int>(kExitOk);
    });
}

int fit(const FitOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<double> xs, ys;
        for (const auto& [x, y] : o.points) {
            xs.push_back(x);
            ys.push_back(y);
        }
        json sources = json::array();
        std::string prov;
        json report = {{"tool", "fit"}, {"kind", o.kind}};
        std::ostringstream line, points;

        if (o.kind == "velocity") {
            const std::string wanted = o.law == analysis::VelocityLaw::tau_e ? "tau_e" : "tau_s";
            for (const fs::path& p : o.analyses) {
                if (!fs::exists(p)) {
                    throw Exit{kExitIo, "analysis file '" + p.string() + "' does not exist"};
                }
                json a;
                try {
                    a = json::parse(read_text_file(p));
                    for (const json& s : a.at("sources")) {
                        sources.push_back(s);
                        prov += "# config_hash=" + s.at("config_hash").get<std::string>() +
                                " layer_convention=" + s.at("layer_convention").get<std::string>() +
                                " cnot_orientation=" + s.at("cnot_orientation").get<std::string>() + "\n";
                    }
                    for (const json& s : a.at("series")) {
                        const json& g = s.at("geometry");
                        if (g.contains("explicit")) {
                            continue;
                        }
                        double distance = 0;
                        if (o.law == analysis::VelocityLaw::tau_e) {
                            if (g.at("distance16").is_null()) {
                                continue;
                            }
                            distance = g.at("distance16").get<double>() / 16.0;
                        } else {
                            distance = g.at("m16").get<double>() / 16.0;
                        }
                        for (const json& k : s.at("kinks")) {
                            if (k.at("name") == wanted && k.value("present", false)) {
                                xs.push_back(distance);
                                ys.push_back(k.at("tau").get<double>());
                            }
                        }
                    }
                } catch (const json::exception& e) {
                    throw Exit{kExitBadInput, "malformed analysis file '" + p.string() + "': " + e.what()};
                }
            }
            const analysis::VelocityFit v = analysis::fit_velocity(xs, ys, o.law);
            report.update({{"law", std::string(analysis::to_string(o.law))},
                           {"v0", v.v0},
                           {"v0_stderr", v.v0_stderr},
                           {"intercept", v.intercept},
                           {"r_squared", v.r_squared},
                           {"distance", xs},
                           {"x", v.x},
                           {"tau", v.tau}});
            points << prov << "distance,x,tau\n";
            for (std::size_t i = 0; i < xs.size(); i++) {
                points << num(xs[i]) << "," << num(v.x[i]) << "," << num(v.tau[i]) << "\n";
            }
            const double xmax = *std::max_element(v.x.begin(), v.x.end());
            line << prov << "x,tau\n";
            for (int i = 0; i <= 20; i++) {
                const double x = xmax * 1.1 * i / 20.0;
                line << num(x) << "," << num(x / v.v0) << "\n";
            }
            out << "v0 = " << v.v0 << " +- " << v.v0_stderr << "  R^2 = " << v.r_squared << "\n";
        } else if (o.kind == "power") {
            if (!o.inputs.empty()) {
                const auto loaded = load_inputs(o, err);
                sources = sources_json(loaded);
                prov = provenance(loaded);
                for (const SeriesRef& r : select_series(loaded, o.observable)) {
                    const TimeSeries& ts = *r.series;
                    std::vector<double> q = ts.mean;
                    if (o.quantity == "sigma") {
                        for (std::size_t i = 0; i < q.size(); i++) {
                            q[i] = std::sqrt(std::max(ts.variance[i], 0.0));
                        }
                    } else if (o.quantity != "mean") {
                        throw Exit{kExitInvalidConfig, "unknown quantity '" + o.quantity + "'"};
                    }
                    xs.push_back(static_cast<double>(ts.n));
                    ys.push_back(analysis::interpolate(ts.tau, q, o.tau));
                }
            }
            const analysis::PowerLawFit pw = analysis::fit_power_law(xs, ys);
            report.update({{"quantity", o.quantity},
                           {"tau", o.tau},
                           {"exponent", pw.exponent},
                           {"exponent_stderr", pw.exponent_stderr},
                           {"log_prefactor", pw.log_prefactor},
                           {"N", xs},
                           {"y", ys}});
            points << prov << "N,y\n";
            for (std::size_t i = 0; i < xs.size(); i++) {
                points << num(xs[i]) << "," << num(ys[i]) << "\n";
            }
            line << prov << "N,y\n";
            const double lo = std::log(*std::min_element(xs.begin(), xs.end()));
            const double hi = std::log(*std::max_element(xs.begin(), xs.end()));
            for (int i = 0; i <= 20; i++) {
                const double ln = lo + (hi - lo) * i / 20.0;
                line << num(std::exp(ln)) << "," << num(std::exp(pw.log_prefactor + pw.exponent * ln)) << "\n";
            }
            out << "exponent = " << pw.exponent << " +- " << pw.exponent_stderr << "\n";
        } else {
            throw Exit{kExitInvalidConfig, "unknown fit kind '" + o.kind + "' (velocity or power)"};
        }
        report["sources"] = std::move(sources);
        write_outputs(o.out,
                      {{"fit.json", report.dump(1) + "\n"}, {"fit_points.csv", points.str()},
                       {"fit_line.csv", line.str()}},
                      out);
        return static_cast<int>(kExitOk);
    });
}

int report(const ReportOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        InputOptions in;
        in.inputs = o.inputs;
        in.force = true;
        const auto loaded = load_inputs(in, err);
        json runs = json::array();
        std::ostringstream md;
        md << "# infoflow report\n\n";
        for (const Loaded& l : loaded) {
            const SweepResult& r = l.res.result;
            md << "## " << l.dir.string() << "\n\n"
               << "- config hash: " << hash_hex(r.config.hash()) << "\n"
               << "- code version: " << l.res.code_version << "\n"
               << "- conventions: " << to_string(r.config.layer_convention) << ", cnot "
               << to_string(r.config.cnot_orientation) << "\n"
               << "- geometry: " << r.config.geometry.descriptor() << " (" << r.config.selection_label() << ")\n\n"
               << "| observable | N | samples | records | final tau | final mean |\n|---|---|---|---|---|---|\n";
            json series = json::array();
            for (const TimeSeries& ts : r.series) {
                md << "| " << ts.observable << " | " << ts.n << " | " << ts.n_samples << " | " << ts.tau.size()
                   << " | " << num(ts.tau.back()) << " | " << num(ts.mean.back()) << " |\n";
                series.push_back({{"observable", ts.observable},
                                  {"N", ts.n},
                                  {"n_samples", ts.n_samples},
                                  {"records", ts.tau.size()},
                                  {"initial_mean", ts.mean.front()},
                                  {"final_tau", ts.tau.back()},
                                  {"final_mean", ts.mean.back()}});
            }
            md << "\n";
            for (const std::string& w : l.res.warnings) {
                md << "> warning: " << w << "\n\n";
            }
            runs.push_back({{"dir", l.dir.string()},
                            {"config_text", r.config.to_text()},
                            {"config_hash", hash_hex(r.config.hash())},
                            {"code_version", l.res.code_version},
                            {"private_mismatches", r.private_mismatches},
                            {"warnings", l.res.warnings},
                            {"series", std::move(series)}});
        }
        json artifacts = json::object();
        for (const fs::path& p : o.artifacts) {
            if (!fs::exists(p)) {
                throw Exit{kExitIo, "artifact '" + p.string() + "' does not exist"};
            }
            try {
                artifacts[p.string()] = json::parse(read_text_file(p));
            } catch (const json::exception& e) {
                throw Exit{kExitBadInput, "artifact '" + p.string() + "' is not JSON: " + e.what()};
            }
            md << "- artifact: " << p.string() << "\n";
        }
        json rep = {{"tool", "report"}, {"sources", sources_json(loaded)}, {"runs", std::move(runs)},
                    {"artifacts", std::move(artifacts)}};
        write_outputs(o.out, {{"report.json", rep.dump(1) + "\n"}, {"report.md", md.str()}}, out);
        return static_cast<int>(kExitOk);
    });
}

int validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        ValidationOptions vo;
        vo.instances = o.instances;
        vo.seed = o.seed;
        const ValidationReport r = run_validation(vo);
        out << r.summary();
        if (!o.out.empty()) {
            json checks = json::array();
            for (const ValidationCheck& c : r.checks) {
                checks.push_back({{"name", c.name},
                                  {"passed", c.passed()},
                                  {"cases", c.cases},
                                  {"failures", c.failures},
                                  {"max_error", c.max_error},
                                  {"first_failure", c.first_failure}});
            }
            json j = {{"tool", "validate"},
                      {"instances", o.instances},
                      {"seed", o.seed},
                      {"passed", r.passed()},
                      {"checks", std::move(checks)}};
            write_outputs(o.out, {{"validate.json", j.dump(1) + "\n"}}, out);
        }
        return static_cast<int>(r.passed() ? kExitOk : kExitCheckFailed);
    });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"infoflow: information flow in brick-wall random Clifford circuits"};
    app.set_version_flag("--version", code_version());
    app.require_subcommand(1);

    RunOptions run_o;
    auto* run_cmd = app.add_subcommand("run", "run a Monte-Carlo sweep and write results.csv + manifest.json");
    run_cmd->add_option("-c,--config", run_o.config, "sweep config file")->required();
    run_cmd->add_option("-o,--out", run_o.out, "output directory")->required();
    run_cmd->add_option("--set", run_o.overrides, "override a config key: key=value (repeatable)");
    run_cmd->add_option("-j,--threads", run_o.threads, "worker threads (0 = all cores)");
    run_cmd->add_flag("-q,--quiet", run_o.quiet, "no progress line");

    auto add_inputs = [](CLI::App* cmd, InputOptions& o) {
        cmd->add_option("-i,--input", o.inputs, "results directory (repeatable)")->required();
        cmd->add_option("--observable", o.observable, "holevo, coherent or private");
        cmd->add_flag("--force", o.force, "combine inputs with mixed conventions");
    };

    AnalyzeOptions an_o;
    std::vector<std::string> windows;
    auto* an_cmd = app.add_subcommand("analyze", "derivatives and kink positions per series");
    add_inputs(an_cmd, an_o);
    an_cmd->add_option("-o,--out", an_o.out, "output directory")->required();
    an_cmd->add_option("--window", windows, "kink window lo:hi (repeatable); default: light-cone guesses");
    an_cmd->add_option("--v0", an_o.v0_guess, "velocity guess used to place default windows");
    an_cmd->add_option("--half-width", an_o.half_width, "half width of default windows");
    an_cmd->add_option("--smooth", an_o.smoothing, "boxcar width before differentiating");
    an_cmd->add_option("--min-significance", an_o.min_significance, "kink significance threshold");

    CollapseOptions co_o;
    std::string tau_range;
    auto* co_cmd = app.add_subcommand("collapse", "finite-size-scaling collapse of dh/dtau");
    add_inputs(co_cmd, co_o);
    co_cmd->add_option("-o,--out", co_o.out, "output directory")->required();
    co_cmd->add_option("--tau-range", tau_range, "search range for tau_c, lo:hi")->required();
    co_cmd->add_option("--tau-step", co_o.search.tau_step, "coarse tau_c step (0 = fixed at lo)");
    co_cmd->add_option("--nu-lo", co_o.search.nu_lo);
    co_cmd->add_option("--nu-hi", co_o.search.nu_hi);
    co_cmd->add_option("--nu-points", co_o.search.nu_points);
    co_cmd->add_option("--half-window", co_o.search.half_window, "tau half window around tau_c");
    co_cmd->add_option("--smooth", co_o.smoothing, "boxcar width before differentiating");
    co_cmd->add_option("--compare-nu", co_o.compare_nu, "report costs at these nu values");
    co_cmd->add_flag("!--no-derivative", co_o.use_derivative, "collapse h instead of dh/dtau");
    co_cmd->add_option("-j,--threads", co_o.threads);

    FitOptions fit_o;
    fit_o.inputs.clear();
    std::vector<std::string> fit_points;
    std::string law = "tau_e";
    auto* fit_cmd = app.add_subcommand("fit", "velocity or power-law fits");
    fit_cmd->add_option("--kind", fit_o.kind, "velocity or power")->required();
    fit_cmd->add_option("-o,--out", fit_o.out, "output directory")->required();
    fit_cmd->add_option("--law", law, "tau_e, tau_s_small_m or tau_s_large_m");
    fit_cmd->add_option("--point", fit_points, "x:y data point (repeatable)");
    fit_cmd->add_option("--analysis", fit_o.analyses, "analysis.json supplying kink positions (repeatable)");
    fit_cmd->add_option("-i,--input", fit_o.inputs, "results directory for power fits (repeatable)");
    fit_cmd->add_option("--observable", fit_o.observable);
    fit_cmd->add_option("--tau", fit_o.tau, "tau at which to read the quantity");
    fit_cmd->add_option("--quantity", fit_o.quantity, "sigma or mean");
    fit_cmd->add_flag("--force", fit_o.force);

    ReportOptions rep_o;
    auto* rep_cmd = app.add_subcommand("report", "summarize results and analysis artifacts");
    rep_cmd->add_option("-i,--input", rep_o.inputs, "results directory (repeatable)")->required();
    rep_cmd->add_option("--artifact", rep_o.artifacts, "JSON artifact to embed (repeatable)");
    rep_cmd->add_option("-o,--out", rep_o.out, "output directory")->required();

    ValidateOptions val_o;
    auto* val_cmd = app.add_subcommand("validate", "oracle equivalence and invariant suites at N <= 10");
    val_cmd->add_option("--instances", val_o.instances);
    val_cmd->add_option("--seed", val_o.seed);
    val_cmd->add_option("-o,--out", val_o.out, "also write validate.json here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << code_version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (CLI::App* sub : app.get_subcommands()) {
            err << sub->help();
        }
        return kExitInvalidConfig;
    }

    try {
        for (const auto& w : windows) {
            an_o.windows.push_back(parse_pair(w));
        }
        for (const auto& p : fit_points) {
            fit_o.points.push_back(parse_pair(p));
        }
        if (!tau_range.empty()) {
            std::tie(co_o.search.tau_lo, co_o.search.tau_hi) = parse_pair(tau_range);
        }
        fit_o.law = analysis::parse_velocity_law(law);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    }

    if (*run_cmd) {
        return run(run_o, out, err);
    }
    if (*an_cmd) {
        return analyze(an_o, out, err);
    }
    if (*co_cmd) {
        return collapse(co_o, out, err);
    }
    if (*fit_cmd) {
        return fit(fit_o, out, err);
    }
    if (*rep_cmd) {
        return report(rep_o, out, err);
    }
    return validate(val_o, out, err);
}

}  // namespace infoflow::cli
