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

#include <omp.h>

#include "infoflow/analysis.hpp"
#include "infoflow/collapse_detail.hpp"

namespace infoflow::analysis {

ScalingFit optimize_collapse(std::span<const ScalingCurve> curves, const CollapseSearch& search, int threads) {
    detail::check_search(curves, search);
    const auto taus = detail::tau_grid(search);
    const auto nus = detail::nu_grid(search);
    const long long cells = static_cast<long long>(taus.size() * nus.size());
    std::vector<double> costs(static_cast<std::size_t>(cells));
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
    for (long long cell = 0; cell < cells; cell++) {
        std::size_t i = static_cast<std::size_t>(cell) / taus.size();
        std::size_t j = static_cast<std::size_t>(cell) % taus.size();
        costs[static_cast<std::size_t>(cell)] = detail::cost_or_inf(curves, taus[j], nus[i], search.half_window);
    }
    return detail::refine_from_grid(curves, search, costs);
}

}  // namespace infoflow::analysis
