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

#ifndef UAVNOMA_MONTECARLO_HPP
#define UAVNOMA_MONTECARLO_HPP

#include "uavnoma/analysis.hpp"
#include "uavnoma/channel.hpp"
#include "uavnoma/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace uavnoma::trajectory {
struct TrajectoryPoint;
}

namespace uavnoma::montecarlo {

struct McConfig
{
    std::int64_t trials = 1'000'000;
    std::uint64_t seed = 20200101;
    int stream_count = 64;   ///< substreams; part of the result's identity, unlike the thread count

    void validate() const;

    /// Trials assigned to substream `index`: an even share, with the
    /// remainder going to the last stream.
    std::int64_t trials_in_stream(int index) const;
};

/// Leaves of the SIC decoding tree.
enum class Event
{
    e1,  ///< AUE decoded first, TUE decoded after cancellation
    e2,  ///< AUE decoded first, TUE lost
    e3,  ///< AUE lost, TUE decoded under full AUE interference, AUE decoded after cancellation
    e4,  ///< AUE lost, TUE decoded, AUE still lost
    e5,  ///< neither decoded
};

struct TrialOutcome
{
    Event event;
    double sinr_step1_aue;                 ///< x_A / (x_T + sigma^2)
    double sinr_step2_tue;                 ///< x_T / sigma^2 after SIC, else x_T / (x_A + sigma^2)
    std::optional<double> sinr_step3_aue;  ///< x_A / sigma^2, only when step 3 is reached
};

/// Walks the decoding tree for one pair of received powers.
TrialOutcome run_trial(double x_a, double x_t, const analysis::DecodingThresholds& th, double noise);

/// Received power of a TUE at horizontal distance r_t with Rayleigh power
/// gain `fading`, after channel-inversion power control.
double tue_received_power(const channel::SystemParams& params, double r_t, double fading);

/// Uniform TUE in the disk (r_T = R sqrt(U)), unit-mean exponential fading.
double sample_tue_received_power(const channel::SystemParams& params, rng::Stream& stream);

struct AueSample
{
    double power;
    bool los;
};

/// LoS ~ Bernoulli(p_los), then Gamma(m_v, mean 1) fading on the matching path.
AueSample sample_aue_received_power(const channel::SystemParams& params, double p_los, double d_a,
                                    rng::Stream& stream);

struct EventCounts
{
    std::array<std::int64_t, 5> by_event{};

    std::int64_t total() const;
    std::int64_t operator[](Event e) const { return by_event[static_cast<int>(e)]; }
    EventCounts& operator+=(const EventCounts& other);
    bool operator==(const EventCounts&) const = default;
};

struct McEstimate
{
    EventCounts counts;
    analysis::CoverageReport report;
};

/// 3-sigma (99.7%) Wald half-width of an estimated proportion.
double wald_halfwidth(double p_hat, std::int64_t trials);

/// Builds a monte_carlo CoverageReport from event counts. p5_residual is the
/// E5 frequency; ci_halfwidth refers to p_tot.
analysis::CoverageReport report_from_counts(const EventCounts& counts);

/// Trials of one substream at a fixed AUE position.
EventCounts run_stream(const channel::SystemParams& params, double p_los, double d_a,
                       const analysis::DecodingThresholds& th, std::uint64_t seed, int stream_index,
                       std::int64_t trials);

/// Substreams executed in parallel with OpenMP. Counts depend only on
/// (seed, stream_count, trials), never on the number of threads.
McEstimate estimate(const channel::SystemParams& params, const channel::LosModel& los,
                    const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                    const McConfig& mc);

/// Serial reference for estimate(); must return identical counts.
McEstimate estimate_serial(const channel::SystemParams& params, const channel::LosModel& los,
                           const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                           const McConfig& mc);

} // namespace uavnoma::montecarlo

#endif
