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

#ifndef UAVNOMA_ANALYSIS_HPP
#define UAVNOMA_ANALYSIS_HPP

#include "uavnoma/channel.hpp"

#include <optional>
#include <string>

namespace uavnoma::trajectory {
struct TrajectoryPoint;
}

namespace uavnoma::analysis {

using channel::NakagamiLinkParams;

/// Linear SINR thresholds of the AUE and TUE.
struct DecodingThresholds
{
    double aue = 0.0;
    double tue = 0.0;

    static DecodingThresholds from_db(double aue_db, double tue_db);
    void validate() const;
};

/// SINR threshold that makes B log2(1 + SINR) >= rate: 2^(rate/B) - 1.
double threshold_from_rate(double rate_bps, double bandwidth_hz);

/// Upper incomplete gamma with integer shape; see numeric::upper_gamma_int.
double upper_gamma_int(int s, double x);

// Joint decoding-event probabilities for one trajectory point. x_A follows
// the LoS/NLoS Gamma mixture in `link`, x_T is exponential with mean
// link.tue_mean, noise is sigma^2.

/// E1: x_A / (x_T + sigma^2) >= theta_A and x_T / sigma^2 >= theta_T.
double p1(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise);

/// E2: x_A / (x_T + sigma^2) >= theta_A and x_T / sigma^2 < theta_T.
double p2(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise);

/// E3: x_A >= theta_A sigma^2, x_T >= theta_T (x_A + sigma^2) and
/// x_A < theta_A (x_T + sigma^2).
///
/// Closed form when theta_A theta_T >= 1 (the last inequality is then implied).
/// Otherwise both TUE constraints bind on different stretches of x_A and the
/// exponential TUE tail is integrated against the x_A density numerically.
/// Throws NumericalError if that quadrature fails to converge.
double p3(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise);

/// The legacy closed form for E3 in the theta_A theta_T < 1 case, kept for
/// side-by-side comparison only. Its correction term is not dimensionless and
/// it disagrees with the event probability; never used in reports.
/// For theta_A theta_T >= 1 this returns the same value as p3().
double p3_legacy_closed_form(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise);

/// True when p3() takes the numerical-integration branch.
bool p3_uses_quadrature(const DecodingThresholds& th);

/// E4: x_A < theta_A sigma^2 and x_T >= theta_T (x_A + sigma^2).
double p4(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise);

enum class Method
{
    analytic,
    semi_analytic,
    monte_carlo,
};

std::string to_string(Method method);

struct CoverageReport
{
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double p4 = 0.0;
    double p_tot = 0.0;   ///< p1 + p3: both users decoded
    double p_aue = 0.0;   ///< p1 + p2 + p3
    double p_tue = 0.0;   ///< p1 + p3 + p4
    double p5_residual = 0.0;
    Method method = Method::analytic;
    std::optional<double> ci_halfwidth;  ///< Monte Carlo only; 3-sigma Wald half-width of p_tot
};

/// Assembles aggregates from event probabilities. Each input is clamped to
/// [0, 1]; in debug builds an assertion fires if any was off by more than 1e-9.
CoverageReport assemble_report(double p1, double p2, double p3, double p4, Method method);

/// Full analytic evaluation at one trajectory point (uses point.h_a and point.r_a).
CoverageReport coverage_report(const channel::SystemParams& params, const channel::LosModel& los,
                               const trajectory::TrajectoryPoint& point, const DecodingThresholds& th);

/// Same, with the AUE position given directly.
CoverageReport coverage_report(const channel::SystemParams& params, const channel::LosModel& los,
                               double r_a, double h_a, const DecodingThresholds& th);

} // namespace uavnoma::analysis

#endif
