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

#include <exception>
#include <mutex>

#include "infoflow/experiment.hpp"

namespace infoflow {

SweepResult run_sweep(const SweepConfig& config, int threads) {
    config.validate();
    const std::size_t n_sizes = config.n_values.size();
    const long long total = static_cast<long long>(n_sizes * config.n_samples);
    const int team = threads > 0 ? threads : omp_get_max_threads();

    detail::SweepAccumulators merged = detail::make_accumulators(config);
    std::exception_ptr failure;
    std::mutex merge_lock;

#pragma omp parallel num_threads(team)
    {
        detail::SweepAccumulators local = detail::make_accumulators(config);
        // Largest N first: flattened index runs sizes in reverse so the long
        // samples are scheduled early.
#pragma omp for schedule(dynamic, 1) nowait
        for (long long job = 0; job < total; job++) {
            std::size_t n_index = n_sizes - 1 - static_cast<std::size_t>(job) / config.n_samples;
            std::size_t sample = static_cast<std::size_t>(job) % config.n_samples;
            try {
                local.add(n_index, config, run_sample(config, config.n_values[n_index], sample));
            } catch (...) {
                std::lock_guard<std::mutex> g(merge_lock);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        std::lock_guard<std::mutex> g(merge_lock);
        merged.merge(local);
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return detail::finish_sweep(config, merged);
}

}  // namespace infoflow
