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

#ifndef INFOFLOW_COLLAPSE_DETAIL_HPP
#define INFOFLOW_COLLAPSE_DETAIL_HPP

// Pieces shared by the serial and OpenMP collapse searches.

#include <vector>

#include "infoflow/analysis.hpp"

namespace infoflow::analysis::detail {

std::vector<double> tau_grid(const CollapseSearch& search);
std::vector<double> nu_grid(const CollapseSearch& search);
void check_search(std::span<const ScalingCurve> curves, const CollapseSearch& search);
/// collapse_cost, or +inf where the window leaves too little overlap.
double cost_or_inf(std::span<const ScalingCurve> curves, double tau_c, double nu, double half_window);

/// Turns a filled coarse grid (row-major [nu][tau]) into a refined fit.
ScalingFit refine_from_grid(std::span<const ScalingCurve> curves, const CollapseSearch& search,
                            const std::vector<double>& costs);

}  // namespace infoflow::analysis::detail

#endif
