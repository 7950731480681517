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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "infoflow/analysis.hpp"

namespace infoflow::analysis {

std::vector<double> boxcar(std::span<const double> y, std::size_t width) {
    if (width == 0 || width % 2 == 0) {
        throw AnalysisError("boxcar: width must be odd and positive");
    }
    const std::size_t half = width / 2;
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); i++) {
        std::size_t lo = i >= half ? i - half : 0;
        std::size_t hi = std::min(y.size() - 1, i + half);
        double s = 0;
        for (std::size_t k = lo; k <= hi; k++) {
            s += y[k];
        }
        out[i] = s / static_cast<double>(hi - lo + 1);
    }
    return out;
}

Curve derivative(std::span<const double> tau, std::span<const double> y, std::size_t smoothing_width) {
    if (tau.size() != y.size()) {
        throw AnalysisError("derivative: tau and value lengths differ");
    }
    if (tau.size() < 3) {
        throw AnalysisError("derivative: need at least three points");
    }
    std::vector<double> ys = smoothing_width > 1 ? boxcar(y, smoothing_width) : std::vector<double>(y.begin(), y.end());
    const std::size_t n = tau.size();
    Curve d;
    d.tau.assign(tau.begin(), tau.end());
    d.value.resize(n);
    d.value[0] = (ys[1] - ys[0]) / (tau[1] - tau[0]);
    for (std::size_t i = 1; i + 1 < n; i++) {
        d.value[i] = (ys[i + 1] - ys[i - 1]) / (tau[i + 1] - tau[i - 1]);
    }
    d.value[n - 1] = (ys[n - 1] - ys[n - 2]) / (tau[n - 1] - tau[n - 2]);
    return d;
}

KinkEstimate estimate_kink(std::span<const double> tau, std::span<const double> y, double tau_lo, double tau_hi,
                           const KinkOptions& options) {
    if (tau.size() != y.size()) {
        throw AnalysisError("estimate_kink: tau and value lengths differ");
    }
    const double eps = 1e-12;
    std::vector<double> x, v;
    for (std::size_t i = 0; i < tau.size(); i++) {
        if (tau[i] >= tau_lo - eps && tau[i] <= tau_hi + eps) {
            x.push_back(tau[i]);
            v.push_back(y[i]);
        }
    }
    const std::size_t n = x.size();
    if (n < 6) {
        throw AnalysisError("estimate_kink: window [" + std::to_string(tau_lo) + ", " + std::to_string(tau_hi) +
                            "] holds " + std::to_string(n) + " points, need 6");
    }

    KinkEstimate best;
    best.sse = std::numeric_limits<double>::infinity();
    best.points = n;
    best.grid_step = (x.back() - x.front()) / static_cast<double>(n - 1);

    {
        Eigen::Matrix2d a = Eigen::Matrix2d::Zero();
        Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
        for (std::size_t i = 0; i < n; i++) {
            Eigen::Vector2d row(1.0, x[i]);
            a += row * row.transpose();
            rhs += row * v[i];
        }
        Eigen::Vector2d c = a.ldlt().solve(rhs);
        double sse = 0;
        for (std::size_t i = 0; i < n; i++) {
            double r = v[i] - c(0) - c(1) * x[i];
            sse += r * r;
        }
        best.sse_single_line = sse;
    }

    for (std::size_t b = 2; b + 2 < n; b++) {
        const double xb = x[b];
        Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
        Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
        for (std::size_t i = 0; i < n; i++) {
            double d = x[i] - xb;
            Eigen::Vector3d row(1.0, std::min(d, 0.0), std::max(d, 0.0));
            a += row * row.transpose();
            rhs += row * v[i];
        }
        Eigen::Matrix3d inv = a.inverse();
        Eigen::Vector3d c = inv * rhs;
        double sse = 0;
        for (std::size_t i = 0; i < n; i++) {
            double d = x[i] - xb;
            double r = v[i] - c(0) - c(1) * std::min(d, 0.0) - c(2) * std::max(d, 0.0);
            sse += r * r;
        }
        if (sse < best.sse) {
            best.sse = sse;
            best.tau = xb;
            best.slope_left = c(1);
            best.slope_right = c(2);
            best.jump = c(2) - c(1);
            double sigma2 = sse / static_cast<double>(n - 3);
            double var_jump = sigma2 * (inv(1, 1) + inv(2, 2) - 2 * inv(1, 2));
            best.jump_stderr = std::sqrt(std::max(var_jump, 0.0));
        }
    }
    // Ties from exactly flat data keep the first candidate; jump is then zero.
    double strength = best.strength();
    if (strength == 0.0) {
        best.significance = 0.0;
    } else if (best.jump_stderr == 0.0) {
        best.significance = std::numeric_limits<double>::infinity();
    } else {
        best.significance = strength / best.jump_stderr;
    }
    best.present = best.significance >= options.min_significance && strength > options.min_jump;
    return best;
}

std::string_view to_string(VelocityLaw law) {
    switch (law) {
        case VelocityLaw::tau_e:
            return "tau_e";
        case VelocityLaw::tau_s_small_m:
            return "tau_s_small_m";
        case VelocityLaw::tau_s_large_m:
            return "tau_s_large_m";
    }
    return "?";
}

VelocityLaw parse_velocity_law(std::string_view s) {
    if (s == "tau_e") {
        return VelocityLaw::tau_e;
    }
    if (s == "tau_s_small_m") {
        return VelocityLaw::tau_s_small_m;
    }
    if (s == "tau_s_large_m") {
        return VelocityLaw::tau_s_large_m;
    }
    throw AnalysisError("unknown velocity law '" + std::string(s) + "'");
}

double transformed_distance(VelocityLaw law, double distance) {
    switch (law) {
        case VelocityLaw::tau_e:
            return distance;
        case VelocityLaw::tau_s_small_m:
            return distance / 2.0;
        case VelocityLaw::tau_s_large_m:
            return (1.0 - distance) / 2.0;
    }
    return distance;
}

std::vector<KinkGuess> theory_kink_guesses(double m, std::optional<double> distance, double v0) {
    if (!(v0 > 0.0)) {
        throw AnalysisError("theory_kink_guesses: v0 must be positive");
    }
    std::vector<KinkGuess> out;
    if (distance && *distance > 0.0) {
        out.push_back({"tau_e", *distance / v0});
    }
    if (m > 0.0 && m < 1.0) {
        const double tau_s = (m <= 0.5 ? m / 2.0 : (1.0 - m) / 2.0) / v0;
        out.push_back({"tau_s", tau_s});
    }
    std::sort(out.begin(), out.end(), [](const KinkGuess& a, const KinkGuess& b) { return a.tau < b.tau; });
    return out;
}

std::vector<std::pair<double, double>> guess_windows(std::span<const KinkGuess> guesses, double half_width) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < guesses.size(); i++) {
        double lo = guesses[i].tau - half_width;
        double hi = guesses[i].tau + half_width;
        if (i > 0) {
            lo = std::max(lo, 0.5 * (guesses[i - 1].tau + guesses[i].tau));
        }
        if (i + 1 < guesses.size()) {
            hi = std::min(hi, 0.5 * (guesses[i].tau + guesses[i + 1].tau));
        }
        out.emplace_back(std::max(lo, 0.0), hi);
    }
    return out;
}

VelocityFit fit_velocity(std::span<const double> distance, std::span<const double> tau_star, VelocityLaw law) {
    if (distance.size() != tau_star.size()) {
        throw AnalysisError("fit_velocity: length mismatch");
    }
    if (distance.size() < 2) {
        throw AnalysisError("fit_velocity: need at least two points");
    }
    VelocityFit fit;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < distance.size(); i++) {
        double x = transformed_distance(law, distance[i]);
        fit.x.push_back(x);
        fit.tau.push_back(tau_star[i]);
        sxx += x * x;
        sxy += x * tau_star[i];
    }
    bool distinct = false;
    for (double x : fit.x) {
        distinct |= std::abs(x - fit.x.front()) > 1e-15;
    }
    if (sxx == 0.0 || !distinct) {
        throw AnalysisError("fit_velocity: degenerate abscissae");
    }
    if (sxy <= 0.0) {
        throw AnalysisError("fit_velocity: non-positive slope, no velocity");
    }
    const double slope = sxy / sxx;
    fit.v0 = 1.0 / slope;
    double mean_tau = 0;
    for (double t : fit.tau) {
        mean_tau += t;
    }
    mean_tau /= static_cast<double>(fit.tau.size());
    double sse = 0, sst = 0;
    for (std::size_t i = 0; i < fit.x.size(); i++) {
        double r = fit.tau[i] - slope * fit.x[i];
        sse += r * r;
        sst += (fit.tau[i] - mean_tau) * (fit.tau[i] - mean_tau);
    }
    fit.r_squared = sst > 0 ? 1.0 - sse / sst : (sse == 0 ? 1.0 : 0.0);
    if (fit.x.size() > 1) {
        double slope_se = std::sqrt(sse / static_cast<double>(fit.x.size() - 1) / sxx);
        fit.v0_stderr = slope_se / (slope * slope);
    }
    return fit;
}

PowerLawFit fit_power_law(std::span<const double> n, std::span<const double> y) {
    if (n.size() != y.size()) {
        throw AnalysisError("fit_power_law: length mismatch");
    }
    if (n.size() < 3) {
        throw AnalysisError("fit_power_law: need at least three sizes");
    }
    const std::size_t k = n.size();
    std::vector<double> lx(k), ly(k);
    for (std::size_t i = 0; i < k; i++) {
        if (!(y[i] > 0.0) || !(n[i] > 0.0)) {
            throw AnalysisError("fit_power_law: non-positive value");
        }
        lx[i] = std::log(n[i]);
        ly[i] = std::log(y[i]);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < k; i++) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; i++) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) {
        throw AnalysisError("fit_power_law: all sizes equal");
    }
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.log_prefactor = my - fit.exponent * mx;
    double sse = 0;
    for (std::size_t i = 0; i < k; i++) {
        double r = ly[i] - fit.log_prefactor - fit.exponent * lx[i];
        sse += r * r;
    }
    fit.exponent_stderr = std::sqrt(sse / static_cast<double>(k - 2) / sxx);
    return fit;
}

double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw AnalysisError("interpolate: bad input");
    }
    if (x <= xs.front()) {
        if (x < xs.front() - 1e-12) {
            throw AnalysisError("interpolate: x below range");
        }
        return ys.front();
    }
    if (x >= xs.back()) {
        if (x > xs.back() + 1e-12) {
            throw AnalysisError("interpolate: x above range");
        }
        return ys.back();
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    std::size_t lo = hi - 1;
    double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + w * (ys[hi] - ys[lo]);
}

}  // namespace infoflow::analysis
