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

#include "infoflow/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace infoflow::analysis {
namespace {

std::vector<double> grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; i++) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return g;
}

TEST(Derivative, ConstantAndLinear) {
    auto t = grid(0, 1, 11);
    std::vector<double> c(11, 3.0), lin(11);
    for (std::size_t i = 0; i < 11; i++) {
        lin[i] = 2.5 * t[i] - 1;
    }
    for (double v : derivative(t, c).value) {
        EXPECT_DOUBLE_EQ(v, 0.0);
    }
    for (double v : derivative(t, lin).value) {
        EXPECT_NEAR(v, 2.5, 1e-12);
    }
    for (double v : derivative(t, lin, 3).value) {
        EXPECT_NEAR(v, 2.5, 1e-9 + 2.5);  // edges of the boxcar bias, interior exact
    }
    auto d = derivative(t, lin, 3).value;
    for (std::size_t i = 2; i + 2 < d.size(); i++) {
        EXPECT_NEAR(d[i], 2.5, 1e-12);
    }
    EXPECT_THROW(derivative(std::vector<double>{0, 1}, std::vector<double>{0, 1}), AnalysisError);
    EXPECT_THROW(boxcar(c, 2), AnalysisError);
}

TEST(Kink, PiecewiseLinearSynthetic) {
    auto t = grid(0, 0.5, 51);
    std::vector<double> y(t.size());
    for (std::size_t i = 0; i < t.size(); i++) {
        y[i] = t[i] < 0.25 ? 0.125 : 0.125 - 0.4 * (t[i] - 0.25);
    }
    KinkEstimate k = estimate_kink(t, y, 0.0, 0.5);
    EXPECT_NEAR(k.tau, 0.25, k.grid_step);
    EXPECT_NEAR(k.jump, -0.4, 1e-9);
    EXPECT_TRUE(k.present);
    EXPECT_EQ(k.points, 51u);
}

TEST(Kink, ConvergesAsNoiseVanishes) {
    auto t = grid(0.3, 0.9, 61);
    for (double sigma : {1e-2, 1e-3, 1e-5}) {
        std::mt19937_64 rng(4);
        std::normal_distribution<double> noise(0, sigma);
        std::vector<double> y(t.size());
        for (std::size_t i = 0; i < t.size(); i++) {
            y[i] = (t[i] < 0.61 ? 0.3 * t[i] : 0.3 * 0.61 + 1.2 * (t[i] - 0.61)) + noise(rng);
        }
        KinkEstimate k = estimate_kink(t, y, 0.3, 0.9);
        const double tol = sigma <= 1e-4 ? k.grid_step : 0.05;
        EXPECT_NEAR(k.tau, 0.61, tol) << sigma;
    }
}

TEST(Kink, AbsentOnStraightNoisyLine) {
    auto t = grid(0, 1, 41);
    std::mt19937_64 rng(8);
    std::normal_distribution<double> noise(0, 0.01);
    std::vector<double> y(t.size());
    for (std::size_t i = 0; i < t.size(); i++) {
        y[i] = 0.2 - 0.1 * t[i] + noise(rng);
    }
    KinkEstimate k = estimate_kink(t, y, 0, 1);
    EXPECT_FALSE(k.present);
    EXPECT_LT(k.significance, 8.0);

    std::vector<double> flat(t.size(), 0.0);
    KinkEstimate z = estimate_kink(t, flat, 0, 1);
    EXPECT_FALSE(z.present);
    EXPECT_EQ(z.jump, 0.0);
}

TEST(Kink, WindowTooSmall) {
    auto t = grid(0, 1, 11);
    std::vector<double> y(11, 0);
    EXPECT_THROW(estimate_kink(t, y, 0.0, 0.4), AnalysisError);
}

std::vector<ScalingCurve> synthetic_family(double tau_c, double nu, const std::vector<std::size_t>& sizes,
                                           double step = 1.0 / 256) {
    std::vector<ScalingCurve> out;
    for (std::size_t n : sizes) {
        ScalingCurve c{n, {}, {}};
        for (double t = tau_c - 0.2; t <= tau_c + 0.2 + 1e-12; t += step) {
            const double x = (t - tau_c) * std::pow(static_cast<double>(n), 1.0 / nu);
            c.tau.push_back(t);
            c.value.push_back(std::tanh(x / 4.0) + 0.3 * std::exp(-x * x / 50.0));
        }
        out.push_back(std::move(c));
    }
    return out;
}

TEST(Collapse, IdenticalCurvesCostZero) {
    ScalingCurve c{0, grid(0, 1, 50), {}};
    for (double t : c.tau) {
        c.value.push_back(std::sin(5 * t));
    }
    std::vector<ScalingCurve> fam;
    for (std::size_t n : {64, 128, 256}) {
        c.n = n;
        fam.push_back(c);
    }
    // Same abscissae means nothing moves when nu -> infinity; at finite nu the
    // curves are stretched differently, so compare at a huge nu.
    EXPECT_NEAR(collapse_cost(fam, 0.5, 1e9, 0.3), 0.0, 1e-12);
}

TEST(Collapse, SyntheticFamilyPrefersTrueExponent) {
    auto fam = synthetic_family(0.8, 1.25, {128, 192, 256, 320});
    const double at = collapse_cost(fam, 0.8, 1.25, 0.1);
    EXPECT_LT(at, 1e-4);
    EXPECT_GT(collapse_cost(fam, 0.8, 0.8, 0.1), 10 * at);
    EXPECT_GT(collapse_cost(fam, 0.8, 2.0, 0.1), 10 * at);
}

TEST(Collapse, AffineInvariance) {
    auto fam = synthetic_family(0.5, 1.5, {64, 128, 256});
    auto moved = fam;
    for (auto& c : moved) {
        for (double& v : c.value) {
            v = 3.0 * v - 7.0;
        }
    }
    EXPECT_NEAR(collapse_cost(fam, 0.52, 1.1, 0.08), collapse_cost(moved, 0.52, 1.1, 0.08), 1e-12);
}

TEST(Collapse, OptimizerRecoversParameters) {
    auto fam = synthetic_family(0.8, 1.25, {128, 192, 256, 320});
    CollapseSearch s;
    s.tau_lo = 0.7;
    s.tau_hi = 0.9;
    s.tau_step = 0.01;
    s.half_window = 0.1;
    ScalingFit f = optimize_collapse_serial(fam, s);
    EXPECT_NEAR(f.nu, 1.25, 0.02);
    EXPECT_NEAR(f.tau_c, 0.8, 0.01);
    EXPECT_LE(f.cost, f.coarse_cost);
    EXPECT_FALSE(f.flat);
    EXPECT_EQ(f.n_values, (std::vector<std::size_t>{128, 192, 256, 320}));
    for (int threads : {1, 2, 4}) {
        ScalingFit g = optimize_collapse(fam, s, threads);
        EXPECT_EQ(g.nu, f.nu);
        EXPECT_EQ(g.tau_c, f.tau_c);
        EXPECT_EQ(g.cost, f.cost);
    }
}

TEST(Collapse, JointModeSharesNu) {
    auto a = synthetic_family(0.5, 1.25, {128, 192, 256});
    auto b = synthetic_family(1.0, 1.25, {128, 192, 256});
    std::vector<std::vector<ScalingCurve>> fams{a, b};
    CollapseSearch sa, sb;
    sa.tau_lo = 0.45;
    sa.tau_hi = 0.55;
    sa.tau_step = 0.01;
    sa.half_window = 0.1;
    sb = sa;
    sb.tau_lo = 0.95;
    sb.tau_hi = 1.05;
    std::vector<CollapseSearch> searches{sa, sb};
    JointScalingFit j = optimize_collapse_joint(fams, searches);
    EXPECT_NEAR(j.nu, 1.25, 0.03);
    ASSERT_EQ(j.tau_c.size(), 2u);
    EXPECT_NEAR(j.tau_c[0], 0.5, 0.01);
    EXPECT_NEAR(j.tau_c[1], 1.0, 0.01);
}

TEST(Collapse, RescaleFamilyPredictsFromOtherSizes) {
    auto fam = synthetic_family(0.8, 1.25, {128, 256, 320});
    auto pts = rescale_family(fam, 0.8, 1.25, 0.05);
    ASSERT_FALSE(pts.empty());
    for (std::size_t i = 1; i < pts.size(); i++) {
        EXPECT_LE(pts[i - 1].x, pts[i].x);
    }
    for (const auto& p : pts) {
        if (std::isfinite(p.master)) {
            EXPECT_NEAR(p.master, p.value, 1e-2);
        }
    }
}

TEST(Collapse, Errors) {
    auto fam = synthetic_family(0.8, 1.25, {128, 256});
    EXPECT_THROW(collapse_cost(fam, 0.8, 1.25, 0.1), AnalysisError);
    auto three = synthetic_family(0.8, 1.25, {128, 256, 320});
    EXPECT_THROW(collapse_cost(three, 0.8, -1.0, 0.1), AnalysisError);
    EXPECT_THROW(collapse_cost(three, 5.0, 1.25, 0.1), AnalysisError);
}

TEST(Velocity, ExactThroughOrigin) {
    std::vector<double> l{1.0 / 16, 2.0 / 16, 3.0 / 16};
    std::vector<double> tau{l[0] / 2, l[1] / 2, l[2] / 2};
    VelocityFit f = fit_velocity(l, tau, VelocityLaw::tau_e);
    EXPECT_NEAR(f.v0, 2.0, 1e-12);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
    EXPECT_NEAR(f.v0_stderr, 0.0, 1e-9);
}

TEST(Velocity, TransformedLaws) {
    std::vector<double> m{2.0 / 16, 6.0 / 16};
    std::vector<double> tau{(m[0] / 2) / 0.2, (m[1] / 2) / 0.2};
    EXPECT_NEAR(fit_velocity(m, tau, VelocityLaw::tau_s_small_m).v0, 0.2, 1e-12);
    // tau_s ratio 1:3 for m = 2/16 vs 6/16.
    EXPECT_NEAR(tau[1] / tau[0], 3.0, 1e-12);
    std::vector<double> big{10.0 / 16, 12.0 / 16};
    std::vector<double> tb{((1 - big[0]) / 2) / 0.2, ((1 - big[1]) / 2) / 0.2};
    EXPECT_NEAR(fit_velocity(big, tb, VelocityLaw::tau_s_large_m).v0, 0.2, 1e-12);
    EXPECT_EQ(parse_velocity_law("tau_s_large_m"), VelocityLaw::tau_s_large_m);
    EXPECT_THROW(parse_velocity_law("tau_x"), AnalysisError);
}

TEST(Velocity, Errors) {
    EXPECT_THROW(fit_velocity(std::vector<double>{0.1}, std::vector<double>{0.5}, VelocityLaw::tau_e), AnalysisError);
    EXPECT_THROW(fit_velocity(std::vector<double>{0.1, 0.1}, std::vector<double>{0.5, 0.6}, VelocityLaw::tau_e),
                 AnalysisError);
}

TEST(PowerLaw, ExactExponent) {
    std::vector<double> n{64, 128, 256, 512};
    std::vector<double> y;
    for (double v : n) {
        y.push_back(3.0 * std::pow(v, -0.68));
    }
    PowerLawFit f = fit_power_law(n, y);
    EXPECT_NEAR(f.exponent, -0.68, 1e-12);
    EXPECT_NEAR(f.log_prefactor, std::log(3.0), 1e-10);
    EXPECT_NEAR(f.exponent_stderr, 0.0, 1e-9);
    y[1] = 0.0;
    EXPECT_THROW(fit_power_law(n, y), AnalysisError);
    EXPECT_THROW(fit_power_law(std::vector<double>{1, 2}, std::vector<double>{1, 2}), AnalysisError);
}

TEST(TheoryGuesses, WindowsDoNotOverlap) {
    auto g = theory_kink_guesses(6.0 / 16, 2.0 / 16, 0.2);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].name, "tau_e");
    EXPECT_NEAR(g[0].tau, 0.625, 1e-12);
    EXPECT_NEAR(g[1].tau, 0.9375, 1e-12);
    auto w = guess_windows(g, 0.3);
    EXPECT_LE(w[0].second, w[1].first + 1e-12);
    auto big = theory_kink_guesses(10.0 / 16, std::nullopt, 0.2);
    ASSERT_EQ(big.size(), 1u);
    EXPECT_NEAR(big[0].tau, 0.9375, 1e-12);
}

TEST(Interpolate, Basics) {
    std::vector<double> x{0, 1, 3};
    std::vector<double> y{0, 2, 6};
    EXPECT_DOUBLE_EQ(interpolate(x, y, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(interpolate(x, y, 2.0), 4.0);
    EXPECT_DOUBLE_EQ(interpolate(x, y, 3.0), 6.0);
}

}  // namespace
}  // namespace infoflow::analysis
