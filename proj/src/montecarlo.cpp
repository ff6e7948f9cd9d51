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

#include "uavnoma/montecarlo.hpp"

#include "uavnoma/errors.hpp"
#include "uavnoma/trajectory.hpp"

#include <cmath>
#include <exception>
#include <vector>

namespace uavnoma::montecarlo {

namespace {

struct PointSetup
{
    double p_los;
    double d_a;
};

PointSetup setup(const channel::SystemParams& params, const channel::LosModel& los,
                 const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                 const McConfig& mc)
{
    params.validate();
    th.validate();
    mc.validate();
    return {channel::los_probability(los, point.r_a, point.h_a, params.bs_height),
            channel::aue_distance(params, point.r_a, point.h_a)};
}

McEstimate finish(const EventCounts& counts) { return {counts, report_from_counts(counts)}; }

} // namespace

void McConfig::validate() const
{
    if (trials < 1)
        throw ConfigError("trial count must be positive", "mc.trials");
    if (stream_count < 1)
        throw ConfigError("stream count must be positive", "mc.streams");
}

std::int64_t McConfig::trials_in_stream(int index) const
{
    const std::int64_t share = trials / stream_count;
    return index == stream_count - 1 ? trials - share * (stream_count - 1) : share;
}

TrialOutcome run_trial(double x_a, double x_t, const analysis::DecodingThresholds& th, double noise)
{
    const double sinr1 = x_a / (x_t + noise);
    if (sinr1 >= th.aue) {
        const double sinr2 = x_t / noise;
        return {sinr2 >= th.tue ? Event::e1 : Event::e2, sinr1, sinr2, std::nullopt};
    }
    // Step 1 failed: the whole AUE signal stays as interference.
    const double sinr2 = x_t / (x_a + noise);
    if (sinr2 < th.tue)
        return {Event::e5, sinr1, sinr2, std::nullopt};
    const double sinr3 = x_a / noise;
    return {sinr3 >= th.aue ? Event::e3 : Event::e4, sinr1, sinr2, sinr3};
}

double tue_received_power(const channel::SystemParams& params, double r_t, double fading)
{
    const double d_t = channel::tue_distance(params, r_t);
    const double tx = channel::tue_transmit_power(params, d_t);
    return tx * std::pow(d_t, -params.alpha_tue) * fading * params.tue_gain;
}

double sample_tue_received_power(const channel::SystemParams& params, rng::Stream& stream)
{
    const double r_t = params.cell_radius * std::sqrt(stream.uniform());
    return tue_received_power(params, r_t, stream.exponential());
}

AueSample sample_aue_received_power(const channel::SystemParams& params, double p_los, double d_a,
                                    rng::Stream& stream)
{
    const bool los = stream.uniform() < p_los;
    const int shape = los ? params.m_los : params.m_nlos;
    const double fading = stream.gamma_int(shape) / shape;
    return {params.aue_tx_power * channel::a2c_path_loss(params, d_a, los) * fading * params.aue_gain, los};
}

std::int64_t EventCounts::total() const
{
    std::int64_t sum = 0;
    for (auto c : by_event)
        sum += c;
    return sum;
}

EventCounts& EventCounts::operator+=(const EventCounts& other)
{
    for (std::size_t i = 0; i < by_event.size(); ++i)
        by_event[i] += other.by_event[i];
    return *this;
}

double wald_halfwidth(double p_hat, std::int64_t trials)
{
    return 3.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

analysis::CoverageReport report_from_counts(const EventCounts& counts)
{
    const double n = static_cast<double>(counts.total());
    auto freq = [&](Event e) { return static_cast<double>(counts[e]) / n; };
    analysis::CoverageReport r;
    r.p1 = freq(Event::e1);
    r.p2 = freq(Event::e2);
    r.p3 = freq(Event::e3);
    r.p4 = freq(Event::e4);
    r.p5_residual = freq(Event::e5);
    // Aggregates from integer sums so that e.g. p_tot is exactly 1 when every trial is E1.
    r.p_tot = static_cast<double>(counts[Event::e1] + counts[Event::e3]) / n;
    r.p_aue = static_cast<double>(counts[Event::e1] + counts[Event::e2] + counts[Event::e3]) / n;
    r.p_tue = static_cast<double>(counts[Event::e1] + counts[Event::e3] + counts[Event::e4]) / n;
    r.method = analysis::Method::monte_carlo;
    r.ci_halfwidth = wald_halfwidth(r.p_tot, counts.total());
    return r;
}

EventCounts run_stream(const channel::SystemParams& params, double p_los, double d_a,
                       const analysis::DecodingThresholds& th, std::uint64_t seed, int stream_index,
                       std::int64_t trials)
{
    rng::Stream stream(seed, static_cast<std::uint64_t>(stream_index));
    EventCounts counts;
    const double noise = params.noise_power;
    for (std::int64_t t = 0; t < trials; ++t) {
        const double x_t = sample_tue_received_power(params, stream);
        const double x_a = sample_aue_received_power(params, p_los, d_a, stream).power;
        ++counts.by_event[static_cast<int>(run_trial(x_a, x_t, th, noise).event)];
    }
    return counts;
}

McEstimate estimate(const channel::SystemParams& params, const channel::LosModel& los,
                    const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                    const McConfig& mc)
{
    const auto [p_los, d_a] = setup(params, los, point, th, mc);
    std::vector<EventCounts> per_stream(mc.stream_count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int s = 0; s < mc.stream_count; ++s) {
        try {
            per_stream[s] = run_stream(params, p_los, d_a, th, mc.seed, s, mc.trials_in_stream(s));
        } catch (...) {
#pragma omp critical(uavnoma_mc_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    EventCounts counts;
    for (const auto& c : per_stream)
        counts += c;
    return finish(counts);
}

McEstimate estimate_serial(const channel::SystemParams& params, const channel::LosModel& los,
                           const trajectory::TrajectoryPoint& point, const analysis::DecodingThresholds& th,
                           const McConfig& mc)
{
    const auto [p_los, d_a] = setup(params, los, point, th, mc);
    EventCounts counts;
    for (int s = 0; s < mc.stream_count; ++s)
        counts += run_stream(params, p_los, d_a, th, mc.seed, s, mc.trials_in_stream(s));
    return finish(counts);
}

} // namespace uavnoma::montecarlo
