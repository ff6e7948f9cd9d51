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

#ifndef UAVNOMA_TRAJECTORY_HPP
#define UAVNOMA_TRAJECTORY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace uavnoma::trajectory {

/// One AUE transmission point. r_a is derived from (x, y) at construction.
struct TrajectoryPoint
{
    int n = 0;          ///< 1-based index along the trajectory
    double x = 0.0;     ///< m
    double y = 0.0;     ///< m
    double h_a = 0.0;   ///< altitude, m
    double r_a = 0.0;   ///< horizontal distance to the BS, m

    static TrajectoryPoint make(int n, double x, double y, double h_a);

    /// Same horizontal position at another altitude.
    TrajectoryPoint at_height(double h) const;
};

using Trajectory = std::vector<TrajectoryPoint>;

/// Archimedes' spiral r = (R / 2 pi M) phi from the cell centre to the edge,
/// sampled every v T metres of arc.
struct SpiralConfig
{
    int rounds = 3;             ///< M
    double speed = 15.0;        ///< v, m/s
    double period = 30.0;       ///< T, s
    double cell_radius = 500.0; ///< R, m
    double height = 25.0;       ///< h_A, m

    void validate() const;
};

/// Closed-form arc length of the spiral from the centre to the cell edge.
double spiral_arc_length(const SpiralConfig& cfg);

/// N = floor(arc length / (v T)). Throws ConfigError when N would be 0.
int spiral_point_count(const SpiralConfig& cfg);

/// Points n = 1..N with r_A[n] = R sqrt(n / N) (equal disk area between
/// neighbours) and azimuth 2 pi M r_A / R, so every point lies on the curve.
Trajectory spiral_points(const SpiralConfig& cfg);

/// Random chord walk: start on the cell edge, fly straight at speed v, and on
/// hitting the edge pick a fresh heading uniformly from the open inward
/// half-plane. A point is recorded every T seconds, starting one period after
/// take-off. Any turn happens mid-interval, so the path length between
/// consecutive points is always v T.
struct ChordWalkConfig
{
    std::uint64_t seed = 1;
    int n_points = 10;
    double speed = 15.0;
    double period = 30.0;
    double cell_radius = 500.0;
    double height = 25.0;

    void validate() const;
};

struct ChordWalk
{
    Trajectory points;

    /// A boundary vertex where a new heading was drawn (vertex 0 is the start).
    struct Turn
    {
        double x, y;
        double heading;         ///< radians, direction of travel leaving the vertex
        double path_position;   ///< metres flown when the vertex was reached
    };
    std::vector<Turn> turns;
};

ChordWalk chord_walk(const ChordWalkConfig& cfg);
Trajectory chord_walk_points(const ChordWalkConfig& cfg);

/// CSV with header `n,x_m,y_m,h_m,r_A_m`. The last column is informational.
void write_trajectory_csv(std::ostream& out, const Trajectory& points);

/// Reads the columns n, x_m, y_m, h_m by header name (others ignored, r_A is
/// recomputed). Throws ConfigError with the offending line number. Rejects
/// points outside the cell when cell_radius > 0 and non-increasing n.
Trajectory read_trajectory_csv(std::istream& in, double cell_radius = 0.0);
Trajectory read_trajectory_csv_file(const std::string& path, double cell_radius = 0.0);

} // namespace uavnoma::trajectory

#endif
