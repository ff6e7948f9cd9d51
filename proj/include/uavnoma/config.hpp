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

#ifndef UAVNOMA_CONFIG_HPP
#define UAVNOMA_CONFIG_HPP

#include "uavnoma/analysis.hpp"
#include "uavnoma/channel.hpp"
#include "uavnoma/montecarlo.hpp"
#include "uavnoma/planner.hpp"
#include "uavnoma/trajectory.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace uavnoma::config {

enum class LosKind
{
    itu,
    three_gpp,
    fixed,
};

struct LosSelection
{
    LosKind kind = LosKind::itu;
    std::vector<std::string> environments{"urban"};   ///< ITU only
    double fixed_probability = 1.0;
    std::map<std::string, channel::LosEnvironment> presets = channel::environment_presets();
    double table_step_m = 10.0;   ///< r_A spacing of the los-table grid

    /// One model per environment for ITU, otherwise a single model labelled
    /// "3gpp" or "fixed".
    std::vector<std::pair<std::string, channel::LosModel>> models() const;
};

enum class TrajectoryKind
{
    spiral,
    chord_walk,
    csv,
};

struct TrajectorySource
{
    TrajectoryKind kind = TrajectoryKind::spiral;
    int rounds = 3;
    double speed = 15.0;
    double period = 30.0;
    std::uint64_t seed = 1;
    int points = 10;
    std::string file;
    std::vector<double> heights{25.0};   ///< ignored for csv files, which carry h_m
};

/// A threshold as written in the output (dB) together with its linear value.
/// Thresholds given as rates keep the exact linear value 2^(rate/B) - 1.
struct Threshold
{
    double db;
    double linear;
};

struct RunConfig
{
    channel::SystemParams system;
    LosSelection los;
    TrajectorySource trajectory;
    std::vector<Threshold> theta_a;
    std::vector<Threshold> theta_t;
    montecarlo::McConfig mc;
    planner::HeightSearchConfig search;
    std::string output_dir = ".";

    void validate() const;

    /// Trajectory at every configured height, ordered by height then n.
    /// CSV trajectories are returned once, with their own heights.
    std::vector<trajectory::Trajectory> trajectories() const;

    /// The horizontal path only (first configured height).
    trajectory::Trajectory base_trajectory() const;
};

/// Parses INI text. Keys outside the known set are errors.
RunConfig parse(std::istream& in, const std::vector<std::string>& overrides = {});
RunConfig parse_file(const std::string& path, const std::vector<std::string>& overrides = {});
/// Defaults plus overrides only.
RunConfig defaults(const std::vector<std::string>& overrides = {});

} // namespace uavnoma::config

#endif
