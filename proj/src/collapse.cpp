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

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "infoflow/analysis.hpp"
#include "infoflow/collapse_detail.hpp"

namespace infoflow::analysis {

namespace {

struct Scaled {
    std::vector<double> x;
    std::vector<double> y;
};

}  // namespace

double collapse_cost(std::span<const ScalingCurve> curves, double tau_c, double nu, double half_window) {
    if (!(nu > 0.0)) {
        throw AnalysisError("collapse_cost: nu must be positive");
    }
    std::set<std::size_t> sizes;
    for (const ScalingCurve& c : curves) {
        sizes.insert(c.n);
    }
    if (sizes.size() < 3) {
        throw AnalysisError("collapse_cost: need at least three distinct system sizes");
    }
    std::vector<Scaled> scaled(curves.size());
    double mean = 0;
    std::size_t total = 0;
    for (std::size_t j = 0; j < curves.size(); j++) {
        const ScalingCurve& c = curves[j];
        const double factor = std::pow(static_cast<double>(c.n), 1.0 / nu);
        for (std::size_t i = 0; i < c.tau.size(); i++) {
            if (std::abs(c.tau[i] - tau_c) <= half_window + 1e-12) {
                scaled[j].x.push_back((c.tau[i] - tau_c) * factor);
                scaled[j].y.push_back(c.value[i]);
                mean += c.value[i];
                total++;
            }
        }
    }
    if (total == 0) {
        throw AnalysisError("collapse_cost: window holds no points");
    }
    mean /= static_cast<double>(total);
    double var = 0;
    for (const Scaled& s : scaled) {
        for (double y : s.y) {
            var += (y - mean) * (y - mean);
        }
    }
    var /= static_cast<double>(total);

    double sq = 0;
    std::size_t covered = 0;
    for (std::size_t j = 0; j < scaled.size(); j++) {
        for (std::size_t i = 0; i < scaled[j].x.size(); i++) {
            const double x = scaled[j].x[i];
            double pred = 0;
            int k_count = 0;
            for (std::size_t k = 0; k < scaled.size(); k++) {
                if (k == j || curves[k].n == curves[j].n || scaled[k].x.size() < 2) {
                    continue;
                }
                if (x < scaled[k].x.front() || x > scaled[k].x.back()) {
                    continue;
                }
                pred += interpolate(scaled[k].x, scaled[k].y, x);
                k_count++;
            }
            if (k_count == 0) {
                continue;
            }
            double d = scaled[j].y[i] - pred / k_count;
            sq += d * d;
            covered++;
        }
    }
    if (covered < 3) {
        throw AnalysisError("collapse_cost: fewer than three overlapping points in the window");
    }
    if (var == 0.0) {
        return 0.0;
    }
    return sq / static_cast<double>(covered) / var;
}

std::vector<RescaledPoint> rescale_family(std::span<const ScalingCurve> curves, double tau_c, double nu,
                                          double half_window) {
    if (!(nu > 0.0)) {
        throw AnalysisError("rescale_family: nu must be positive");
    }
    std::vector<Scaled> scaled(curves.size());
    std::vector<RescaledPoint> out;
    for (std::size_t j = 0; j < curves.size(); j++) {
        const ScalingCurve& c = curves[j];
        const double factor = std::pow(static_cast<double>(c.n), 1.0 / nu);
        for (std::size_t i = 0; i < c.tau.size(); i++) {
            if (std::abs(c.tau[i] - tau_c) <= half_window + 1e-12) {
                scaled[j].x.push_back((c.tau[i] - tau_c) * factor);
                scaled[j].y.push_back(c.value[i]);
                out.push_back({c.n, c.tau[i], scaled[j].x.back(), c.value[i], 0.0});
            }
        }
    }
    std::size_t idx = 0;
    for (std::size_t j = 0; j < scaled.size(); j++) {
        for (std::size_t i = 0; i < scaled[j].x.size(); i++, idx++) {
            const double x = scaled[j].x[i];
            double pred = 0;
            int k_count = 0;
            for (std::size_t k = 0; k < scaled.size(); k++) {
                if (k == j || curves[k].n == curves[j].n || scaled[k].x.size() < 2) {
                    continue;
                }
                if (x < scaled[k].x.front() || x > scaled[k].x.back()) {
                    continue;
                }
                pred += interpolate(scaled[k].x, scaled[k].y, x);
                k_count++;
            }
            out[idx].master = k_count ? pred / k_count : std::numeric_limits<double>::quiet_NaN();
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    return out;
}

namespace detail {

std::vector<double> tau_grid(const CollapseSearch& s) {
    std::vector<double> g;
    if (s.tau_step <= 0.0) {
        g.push_back(s.tau_lo);
        return g;
    }
    const std::size_t count = static_cast<std::size_t>(std::floor((s.tau_hi - s.tau_lo) / s.tau_step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; i++) {
        g.push_back(s.tau_lo + static_cast<double>(i) * s.tau_step);
    }
    return g;
}

std::vector<double> nu_grid(const CollapseSearch& s) {
    std::vector<double> g;
    if (s.nu_points < 2) {
        g.push_back(s.nu_lo);
        return g;
    }
    for (std::size_t i = 0; i < s.nu_points; i++) {
        g.push_back(s.nu_lo + (s.nu_hi - s.nu_lo) * static_cast<double>(i) / static_cast<double>(s.nu_points - 1));
    }
    return g;
}

void check_search(std::span<const ScalingCurve> curves, const CollapseSearch& s) {
    if (curves.empty()) {
        throw AnalysisError("optimize_collapse: no curves");
    }
    if (!(s.nu_lo > 0.0) || s.nu_hi < s.nu_lo || s.tau_hi < s.tau_lo || s.half_window <= 0.0) {
        throw AnalysisError("optimize_collapse: invalid search bounds");
    }
}

double cost_or_inf(std::span<const ScalingCurve> curves, double tau_c, double nu, double half_window) {
    try {
        return collapse_cost(curves, tau_c, nu, half_window);
    } catch (const AnalysisError&) {
        return std::numeric_limits<double>::infinity();
    }
}

ScalingFit refine_from_grid(std::span<const ScalingCurve> curves, const CollapseSearch& search,
                            const std::vector<double>& costs) {
    const auto taus = tau_grid(search);
    const auto nus = nu_grid(search);
    ScalingFit fit;
    fit.search = search;
    fit.grid_evaluations = costs.size();
    for (const ScalingCurve& c : curves) {
        if (std::find(fit.n_values.begin(), fit.n_values.end(), c.n) == fit.n_values.end()) {
            fit.n_values.push_back(c.n);
        }
    }
    std::size_t best = 0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (std::size_t i = 0; i < costs.size(); i++) {
        if (costs[i] < costs[best]) {
            best = i;
        }
        if (std::isfinite(costs[i])) {
            lo = std::min(lo, costs[i]);
            hi = std::max(hi, costs[i]);
        }
    }
    if (!std::isfinite(costs[best])) {
        throw AnalysisError("optimize_collapse: no grid point leaves enough overlapping points");
    }
    fit.flat = hi - lo <= 1e-9 * std::max(hi, 1e-300);
    fit.nu = nus[best / taus.size()];
    fit.tau_c = taus[best % taus.size()];
    fit.cost = costs[best];
    fit.coarse_cost = costs[best];
    if (nus.size() < 2) {
        return fit;
    }

    // Golden-section on the tau-profiled cost, bracketed by the neighbouring nu nodes.
    const double step = nus[1] - nus[0];
    double a = std::max(search.nu_lo, fit.nu - step);
    double b = std::min(search.nu_hi, fit.nu + step);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    auto eval = [&](double nu) {
        double tau_c = 0;
        double c = profile_cost(curves, search, nu, &tau_c);
        if (c < fit.cost) {
            fit.cost = c;
            fit.nu = nu;
            fit.tau_c = tau_c;
        }
        return c;
    };
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = eval(x1), f2 = eval(x2);
    while (b - a > search.nu_tolerance) {
        fit.refinement_steps++;
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = eval(x2);
        }
    }
    return fit;
}

}  // namespace detail

double profile_cost(std::span<const ScalingCurve> curves, const CollapseSearch& search, double nu, double* tau_c) {
    double best = std::numeric_limits<double>::infinity();
    double arg = search.tau_lo;
    for (double t : detail::tau_grid(search)) {
        double c = detail::cost_or_inf(curves, t, nu, search.half_window);
        if (c < best) {
            best = c;
            arg = t;
        }
    }
    if (tau_c) {
        *tau_c = arg;
    }
    return best;
}

ScalingFit optimize_collapse_serial(std::span<const ScalingCurve> curves, const CollapseSearch& search) {
    detail::check_search(curves, search);
    const auto taus = detail::tau_grid(search);
    const auto nus = detail::nu_grid(search);
    std::vector<double> costs(taus.size() * nus.size());
    for (std::size_t i = 0; i < nus.size(); i++) {
        for (std::size_t j = 0; j < taus.size(); j++) {
            costs[i * taus.size() + j] = detail::cost_or_inf(curves, taus[j], nus[i], search.half_window);
        }
    }
    return detail::refine_from_grid(curves, search, costs);
}

JointScalingFit optimize_collapse_joint(std::span<const std::vector<ScalingCurve>> families,
                                        std::span<const CollapseSearch> searches) {
    if (families.empty() || families.size() != searches.size()) {
        throw AnalysisError("optimize_collapse_joint: need one search per family");
    }
    for (std::size_t f = 0; f < families.size(); f++) {
        detail::check_search(families[f], searches[f]);
    }
    const CollapseSearch& s0 = searches.front();
    auto total = [&](double nu, std::vector<double>* taus) {
        double sum = 0;
        for (std::size_t f = 0; f < families.size(); f++) {
            double t = 0;
            sum += profile_cost(families[f], searches[f], nu, &t);
            if (taus) {
                (*taus)[f] = t;
            }
        }
        return sum;
    };
    JointScalingFit fit;
    fit.tau_c.resize(families.size());
    fit.cost = std::numeric_limits<double>::infinity();
    auto nus = detail::nu_grid(s0);
    for (double nu : nus) {
        std::vector<double> t(families.size());
        double c = total(nu, &t);
        if (c < fit.cost) {
            fit.cost = c;
            fit.nu = nu;
            fit.tau_c = t;
        }
    }
    if (!std::isfinite(fit.cost)) {
        throw AnalysisError("optimize_collapse_joint: no nu leaves enough overlapping points");
    }
    if (nus.size() >= 2) {
        const double step = nus[1] - nus[0];
        double a = std::max(s0.nu_lo, fit.nu - step), b = std::min(s0.nu_hi, fit.nu + step);
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        while (b - a > s0.nu_tolerance) {
            double x1 = b - g * (b - a), x2 = a + g * (b - a);
            if (total(x1, nullptr) <= total(x2, nullptr)) {
                b = x2;
            } else {
                a = x1;
            }
        }
        std::vector<double> t(families.size());
        double nu = 0.5 * (a + b);
        double c = total(nu, &t);
        if (c < fit.cost) {
            fit.cost = c;
            fit.nu = nu;
            fit.tau_c = t;
        }
    }
    return fit;
}

}  // namespace infoflow::analysis
