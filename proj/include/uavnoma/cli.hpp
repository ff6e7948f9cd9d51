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

#ifndef UAVNOMA_CLI_HPP
#define UAVNOMA_CLI_HPP

#include "uavnoma/analysis.hpp"
#include "uavnoma/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace uavnoma::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_config = 1,
    exit_numerical = 2,
    exit_validation = 3,
};

/// Analytic and Monte Carlo reports agree when every probability is within
/// 3 sqrt(p(1 - p) / trials) + 1e-4 of the estimate p.
bool mc_agrees(const analysis::CoverageReport& analytic, const analysis::CoverageReport& mc, std::int64_t trials);

struct CoverageOutput
{
    std::string csv;
    bool agrees = true;   ///< always true without Monte Carlo rows
};

CoverageOutput coverage_csv(const config::RunConfig& cfg, bool with_monte_carlo);
std::string min_height_csv(const config::RunConfig& cfg);
std::string trajectory_csv(const config::RunConfig& cfg);
std::string los_table_csv(const config::RunConfig& cfg);

/// Full command line entry point; returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace uavnoma::cli

#endif
