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

#ifndef INFOFLOW_ANALYSIS_HPP
#define INFOFLOW_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace infoflow::analysis {

class AnalysisError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Curve {
    std::vector<double> tau;
    std::vector<double> value;
};

/// Centered boxcar average of odd width `width`, shrinking at the ends.
std::vector<double> boxcar(std::span<const double> y, std::size_t width);

/// dy/dtau by central differences, one-sided at both ends, after optional
/// boxcar pre-smoothing. Needs at least three points.
Curve derivative(std::span<const double> tau, std::span<const double> y, std::size_t smoothing_width = 1);

struct KinkOptions {
    /// |slope jump| / standard error required to call the kink present.
    double min_significance = 8.0;
    /// Absolute |slope jump| floor, in observable units per unit tau.
    double min_jump = 0.0;
};

/// Best continuous two-segment (hinge) fit inside a window.
struct KinkEstimate {
    double tau = 0.0;
    double slope_left = 0.0;
    double slope_right = 0.0;
    /// slope_right - slope_left.
    double jump = 0.0;
    double jump_stderr = 0.0;
    /// |jump| / jump_stderr; infinite for a noiseless nonzero jump.
    double significance = 0.0;
    double sse = 0.0;
    /// SSE of a single straight line through the window, for comparison.
    double sse_single_line = 0.0;
    double grid_step = 0.0;
    std::size_t points = 0;
    bool present = false;

    double strength() const { return jump < 0 ? -jump : jump; }
};

/// Scans every grid point of [tau_lo, tau_hi] with at least three window points on
/// each side as the breakpoint, fits one continuous line per side by least squares
/// and returns the candidate with the smallest total squared residual.
/// `present` is false when the slope jump does not clear `options`; that is a valid
/// outcome, not an error. Throws AnalysisError for windows with fewer than six points.
KinkEstimate estimate_kink(std::span<const double> tau, std::span<const double> y, double tau_lo, double tau_hi,
                           const KinkOptions& options = {});

/// One member of a finite-size-scaling family.
struct ScalingCurve {
    std::size_t n = 0;
    std::vector<double> tau;
    std::vector<double> value;
};

/// Rescales each curve's abscissa to (tau - tau_c) N^(1/nu) over the points with
/// |tau - tau_c| <= half_window, predicts every point from the other curves by
/// linear interpolation where they cover it, and returns the mean squared
/// deviation divided by the variance of all windowed ordinates.
/// Throws AnalysisError for fewer than three sizes or fewer than three overlapping points.
double collapse_cost(std::span<const ScalingCurve> curves, double tau_c, double nu, double half_window);

/// One rescaled point of a collapse, with the value predicted from the other sizes
/// (NaN when no other size covers its abscissa).
struct RescaledPoint {
    std::size_t n = 0;
    double tau = 0.0;
    double x = 0.0;
    double value = 0.0;
    double master = 0.0;
};

/// Points inside the window, rescaled to x = (tau - tau_c) N^{1/nu}, ordered by x.
std::vector<RescaledPoint> rescale_family(std::span<const ScalingCurve> curves, double tau_c, double nu,
                                          double half_window);

struct CollapseSearch {
    double tau_lo = 0.0;
    double tau_hi = 0.0;
    double tau_step = 0.0;
    double nu_lo = 0.5;
    double nu_hi = 3.0;
    std::size_t nu_points = 26;
    double half_window = 0.05;
    double nu_tolerance = 1e-3;
};

struct ScalingFit {
    double tau_c = 0.0;
    double nu = 0.0;
    double cost = 0.0;
    double coarse_cost = 0.0;
    std::vector<std::size_t> n_values;
    CollapseSearch search;
    std::size_t refinement_steps = 0;
    std::size_t grid_evaluations = 0;
    /// Relative spread of the coarse grid costs below 1e-9.
    bool flat = false;
};

/// min over the tau_c grid of collapse_cost at fixed nu; writes the argmin to `tau_c`.
double profile_cost(std::span<const ScalingCurve> curves, const CollapseSearch& search, double nu, double* tau_c);

/// Coarse (tau_c, nu) grid search followed by golden-section refinement of nu on the
/// profiled cost. Reference implementation on the calling thread.
ScalingFit optimize_collapse_serial(std::span<const ScalingCurve> curves, const CollapseSearch& search);

/// Same search with the coarse grid evaluated by an OpenMP team (0 = runtime default).
ScalingFit optimize_collapse(std::span<const ScalingCurve> curves, const CollapseSearch& search, int threads = 0);

/// Shared nu across several transition points, each with its own tau_c window.
struct JointScalingFit {
    double nu = 0.0;
    double cost = 0.0;
    std::vector<double> tau_c;
};

JointScalingFit optimize_collapse_joint(std::span<const std::vector<ScalingCurve>> families,
                                        std::span<const CollapseSearch> searches);

enum class VelocityLaw { tau_e, tau_s_small_m, tau_s_large_m };

std::string_view to_string(VelocityLaw law);
VelocityLaw parse_velocity_law(std::string_view s);
/// l, m/2 or (1-m)/2.
double transformed_distance(VelocityLaw law, double distance);

struct VelocityFit {
    double v0 = 0.0;
    double v0_stderr = 0.0;
    /// Always zero for the through-origin model; kept for report symmetry.
    double intercept = 0.0;
    /// Centered coefficient of determination.
    double r_squared = 0.0;
    std::vector<double> x;
    std::vector<double> tau;
};

/// Least squares tau = x / v0 through the origin, x the transformed distance.
VelocityFit fit_velocity(std::span<const double> distance, std::span<const double> tau_star, VelocityLaw law);

/// Where the light-cone picture puts a transition, before any data is seen.
struct KinkGuess {
    std::string name;
    double tau = 0.0;
};

/// Guesses for a consecutive measured block of fraction m whose source sits a
/// fraction `distance` inside its boundary (nullopt: source position random).
/// tau_e = distance / v0; tau_s = (m/2)/v0 for m <= 1/2, else ((1-m)/2)/v0.
std::vector<KinkGuess> theory_kink_guesses(double m, std::optional<double> distance, double v0);

/// Symmetric windows around each guess, shrunk so neighbouring windows never overlap.
std::vector<std::pair<double, double>> guess_windows(std::span<const KinkGuess> guesses, double half_width);

struct PowerLawFit {
    double exponent = 0.0;
    double exponent_stderr = 0.0;
    double log_prefactor = 0.0;
};

/// Least squares on (log N, log y). Needs three sizes and positive y.
PowerLawFit fit_power_law(std::span<const double> n, std::span<const double> y);

/// Linear interpolation of y at x (x inside the sampled range).
double interpolate(std::span<const double> xs, std::span<const double> ys, double x);

}  // namespace infoflow::analysis

#endif
