// uavnoma: aerial-terrestrial uplink NOMA rate-coverage analysis
// Copyright (C) 2026 The uavnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "uavnoma/planner.hpp"

#include "uavnoma/errors.hpp"

#include <cmath>
#include <exception>

namespace uavnoma::planner {

void HeightSearchConfig::validate() const
{
    if (!(h_min < h_max))
        throw ConfigError("h_min must be below h_max", "search.h_min_m");
    if (!(h_step > 0.0))
        throw ConfigError("height step must be positive", "search.h_step_m");
    if (!(qos >= 0.0 && qos < 1.0))
        throw ConfigError("QoS target must lie in [0, 1)", "search.qos");
}

std::vector<double> height_grid(const HeightSearchConfig& cfg)
{
    cfg.validate();
    const auto steps = static_cast<long>(std::floor((cfg.h_max - cfg.h_min) / cfg.h_step + 1e-9));
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (long k = 0; k <= steps; ++k)
        grid.push_back(cfg.h_min + k * cfg.h_step);
    return grid;
}

std::vector<double> sweep_p_tot(const channel::SystemParams& params, const channel::LosModel& los,
                                const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                                const std::vector<double>& heights)
{
    std::vector<double> p_tot(heights.size());
    const long count = static_cast<long>(heights.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        try {
            p_tot[i] = analysis::coverage_report(params, los, point.r_a, heights[i], th).p_tot;
        } catch (...) {
#pragma omp critical(uavnoma_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return p_tot;
}

std::vector<double> sweep_p_tot_serial(const channel::SystemParams& params, const channel::LosModel& los,
                                       const trajectory::TrajectoryPoint& point,
                                       const analysis::DecodingThresholds& th, const std::vector<double>& heights)
{
    std::vector<double> p_tot;
    p_tot.reserve(heights.size());
    for (double h : heights)
        p_tot.push_back(analysis::coverage_report(params, los, point.r_a, h, th).p_tot);
    return p_tot;
}

HeightResult summarize_sweep(int point_index, const std::vector<double>& heights, const std::vector<double>& p_tot,
                             double qos)
{
    HeightResult result;
    result.point_index = point_index;
    result.best_p_tot = -1.0;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (!result.min_height && p_tot[i] >= qos)
            result.min_height = heights[i];
        if (p_tot[i] > result.best_p_tot) {
            result.best_p_tot = p_tot[i];
            result.best_height = heights[i];
        }
    }
    return result;
}

HeightResult min_height(const channel::SystemParams& params, const channel::LosModel& los,
                        const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                        const HeightSearchConfig& cfg)
{
    const auto heights = height_grid(cfg);
    return summarize_sweep(point.n, heights, sweep_p_tot(params, los, point, th, heights), cfg.qos);
}

std::pair<double, double> best_height(const channel::SystemParams& params, const channel::LosModel& los,
                                      const trajectory::TrajectoryPoint& point,
                                      const analysis::DecodingThresholds& th, const HeightSearchConfig& cfg)
{
    const auto result = min_height(params, los, point, th, cfg);
    return {result.best_height, result.best_p_tot};
}

} // namespace uavnoma::planner
