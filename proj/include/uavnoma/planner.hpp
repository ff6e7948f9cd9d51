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

#ifndef UAVNOMA_PLANNER_HPP
#define UAVNOMA_PLANNER_HPP

#include "uavnoma/analysis.hpp"
#include "uavnoma/channel.hpp"
#include "uavnoma/trajectory.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace uavnoma::planner {

struct HeightSearchConfig
{
    double h_min = 25.0;
    double h_max = 300.0;
    double h_step = 1.0;
    double qos = 0.9;   ///< required P_Tot

    void validate() const;
};

struct HeightResult
{
    int point_index = 0;
    std::optional<double> min_height;   ///< empty: QoS unreachable on the grid
    double best_height = 0.0;
    double best_p_tot = 0.0;
};

/// h_min, h_min + step, ... up to h_max (inclusive within rounding).
std::vector<double> height_grid(const HeightSearchConfig& cfg);

/// Analytic P_Tot at every grid height for one horizontal position,
/// evaluated in parallel with OpenMP.
std::vector<double> sweep_p_tot(const channel::SystemParams& params, const channel::LosModel& los,
                                const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                                const std::vector<double>& heights);

/// Serial reference for sweep_p_tot().
std::vector<double> sweep_p_tot_serial(const channel::SystemParams& params, const channel::LosModel& los,
                                       const trajectory::TrajectoryPoint& point,
                                       const analysis::DecodingThresholds& th, const std::vector<double>& heights);

/// Reduces a full sweep. P_Tot need not be monotone in height, so the
/// minimum feasible height is the lowest grid point meeting qos anywhere on
/// the grid; best height ties go to the lowest height.
HeightResult summarize_sweep(int point_index, const std::vector<double>& heights, const std::vector<double>& p_tot,
                             double qos);

/// Lowest grid height with P_Tot >= qos, plus the best height, from one sweep.
HeightResult min_height(const channel::SystemParams& params, const channel::LosModel& los,
                        const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                        const HeightSearchConfig& cfg);

/// Argmax of P_Tot over the grid (lowest height on ties).
std::pair<double, double> best_height(const channel::SystemParams& params, const channel::LosModel& los,
                                      const trajectory::TrajectoryPoint& point,
                                      const analysis::DecodingThresholds& th, const HeightSearchConfig& cfg);

} // namespace uavnoma::planner

#endif
