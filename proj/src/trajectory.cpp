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

#include "uavnoma/trajectory.hpp"

#include "uavnoma/csv.hpp"
#include "uavnoma/errors.hpp"
#include "uavnoma/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>

namespace uavnoma::trajectory {

namespace {

constexpr double kPi = std::numbers::pi;

// Heading drawn uniformly from the open half-plane facing the cell centre
// from boundary point (x, y).
double inward_heading(rng::Stream& stream, double x, double y)
{
    double u = stream.uniform();
    while (u == 0.0)
        u = stream.uniform();
    const double normal = std::atan2(-y, -x);
    return normal + (u - 0.5) * kPi;
}

} // namespace

TrajectoryPoint TrajectoryPoint::make(int n, double x, double y, double h_a)
{
    return {n, x, y, h_a, std::hypot(x, y)};
}

TrajectoryPoint TrajectoryPoint::at_height(double h) const
{
    TrajectoryPoint p = *this;
    p.h_a = h;
    return p;
}

void SpiralConfig::validate() const
{
    if (rounds < 1)
        throw ConfigError("spiral needs at least one round", "trajectory.rounds");
    if (!(speed > 0.0))
        throw ConfigError("speed must be positive", "trajectory.speed_mps");
    if (!(period > 0.0))
        throw ConfigError("transmission period must be positive", "trajectory.period_s");
    if (!(cell_radius > 0.0))
        throw ConfigError("cell radius must be positive", "system.cell_radius_m");
}

double spiral_arc_length(const SpiralConfig& cfg)
{
    const double phi_edge = 2.0 * kPi * cfg.rounds;
    return cfg.cell_radius * (phi_edge * std::sqrt(1.0 + phi_edge * phi_edge) + std::asinh(phi_edge))
         / (4.0 * kPi * cfg.rounds);
}

int spiral_point_count(const SpiralConfig& cfg)
{
    cfg.validate();
    const double n = std::floor(spiral_arc_length(cfg) / (cfg.speed * cfg.period));
    if (n < 1.0)
        throw ConfigError("spiral yields no transmission point: v T exceeds the path length");
    return static_cast<int>(n);
}

Trajectory spiral_points(const SpiralConfig& cfg)
{
    const int count = spiral_point_count(cfg);
    Trajectory out;
    out.reserve(count);
    for (int n = 1; n <= count; ++n) {
        const double r = cfg.cell_radius * std::sqrt(static_cast<double>(n) / count);
        const double phi = 2.0 * kPi * cfg.rounds * r / cfg.cell_radius;
        // r_a is the defining quantity here; keep it exact rather than hypot(x, y).
        out.push_back({n, r * std::cos(phi), r * std::sin(phi), cfg.height, r});
    }
    return out;
}

void ChordWalkConfig::validate() const
{
    if (n_points < 1)
        throw ConfigError("chord walk needs at least one point", "trajectory.points");
    if (!(speed > 0.0))
        throw ConfigError("speed must be positive", "trajectory.speed_mps");
    if (!(period > 0.0))
        throw ConfigError("transmission period must be positive", "trajectory.period_s");
    if (!(cell_radius > 0.0))
        throw ConfigError("cell radius must be positive", "system.cell_radius_m");
}

ChordWalk chord_walk(const ChordWalkConfig& cfg)
{
    cfg.validate();
    const double radius = cfg.cell_radius;
    const double step = cfg.speed * cfg.period;
    rng::Stream stream(cfg.seed, 0);

    ChordWalk walk;
    const double start = 2.0 * kPi * stream.uniform();
    double x = radius * std::cos(start);
    double y = radius * std::sin(start);
    double heading = inward_heading(stream, x, y);
    double flown = 0.0;
    walk.turns.push_back({x, y, heading, flown});

    for (int n = 1; n <= cfg.n_points; ++n) {
        double remaining = step;
        while (remaining > 0.0) {
            const double ux = std::cos(heading);
            const double uy = std::sin(heading);
            const double b = x * ux + y * uy;
            const double c = x * x + y * y - radius * radius;
            const double to_edge = -b + std::sqrt(std::max(b * b - c, 0.0));
            if (to_edge > remaining) {
                x += remaining * ux;
                y += remaining * uy;
                flown += remaining;
                remaining = 0.0;
            } else {
                x += to_edge * ux;
                y += to_edge * uy;
                const double scale = radius / std::hypot(x, y);
                x *= scale;
                y *= scale;
                flown += to_edge;
                remaining -= to_edge;
                heading = inward_heading(stream, x, y);
                walk.turns.push_back({x, y, heading, flown});
            }
        }
        auto point = TrajectoryPoint::make(n, x, y, cfg.height);
        if (point.r_a > radius)
            point.r_a = radius;
        walk.points.push_back(point);
    }
    return walk;
}

Trajectory chord_walk_points(const ChordWalkConfig& cfg) { return chord_walk(cfg).points; }

void write_trajectory_csv(std::ostream& out, const Trajectory& points)
{
    csv::write_row(out, {"n", "x_m", "y_m", "h_m", "r_A_m"});
    for (const auto& p : points) {
        csv::write_row(out, {std::to_string(p.n), csv::format_double(p.x), csv::format_double(p.y),
                             csv::format_double(p.h_a), csv::format_double(p.r_a)});
    }
}

Trajectory read_trajectory_csv(std::istream& in, double cell_radius)
{
    std::string line;
    int line_no = 0;
    std::map<std::string, std::size_t> column;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto header = csv::split_line(line);
        for (std::size_t i = 0; i < header.size(); ++i)
            column[header[i]] = i;
        break;
    }
    for (const char* required : {"n", "x_m", "y_m", "h_m"}) {
        if (!column.count(required))
            throw ConfigError(std::string("trajectory CSV header lacks column '") + required + "'",
                              "line " + std::to_string(line_no));
    }

    Trajectory out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto fields = csv::split_line(line);
        const std::string where = "line " + std::to_string(line_no);
        auto field = [&](const char* name) {
            const std::size_t idx = column.at(name);
            if (idx >= fields.size())
                throw ConfigError(std::string("missing field '") + name + "'", where);
            try {
                return csv::parse_double(fields[idx]);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what(), where);
            }
        };
        const double n_value = field("n");
        if (n_value != std::floor(n_value) || n_value < 1.0)
            throw ConfigError("point index n must be a positive integer", where);
        auto point = TrajectoryPoint::make(static_cast<int>(n_value), field("x_m"), field("y_m"), field("h_m"));
        if (!out.empty() && point.n <= out.back().n)
            throw ConfigError("point indices must be strictly increasing", where);
        if (cell_radius > 0.0 && point.r_a > cell_radius * (1.0 + 1e-12))
            throw ConfigError("point lies outside the cell", where);
        out.push_back(point);
    }
    if (out.empty())
        throw ConfigError("trajectory CSV has no points");
    return out;
}

Trajectory read_trajectory_csv_file(const std::string& path, double cell_radius)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open trajectory file '" + path + "'");
    return read_trajectory_csv(in, cell_radius);
}

} // namespace uavnoma::trajectory
