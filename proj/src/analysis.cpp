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

#include "uavnoma/analysis.hpp"

#include "uavnoma/errors.hpp"
#include "uavnoma/quadrature.hpp"
#include "uavnoma/special.hpp"
#include "uavnoma/trajectory.hpp"
#include "uavnoma/units.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numbers>

namespace uavnoma::analysis {

namespace {

struct Component
{
    double weight;
    int shape;
    double rate;
};

std::array<Component, 2> components(const NakagamiLinkParams& link)
{
    return {Component{link.p_los, link.m_los, link.rate_los},
            Component{1.0 - link.p_los, link.m_nlos, link.rate_nlos}};
}

// Shared kernel of E1/E2. With u = x_T + sigma^2 and x_A ~ Gamma(m, beta),
//   P(x_A >= theta_A u) = sum_{i<m} (beta theta_A u)^i / i! e^{-beta theta_A u},
// and integrating against the exponential TUE density over u in [lo, inf)
// leaves, per component,
//   e^{sigma^2/mu} sum_{i<m} q^i (1 - q) Q(i + 1, c lo),
// with c = beta theta_A + 1/mu and q = beta theta_A / c.
double first_step_tail(const Component& comp, double theta_a, double mu, double noise, double lo)
{
    const double inv_mu = 1.0 / mu;
    const double c = comp.rate * theta_a + inv_mu;
    const double q = comp.rate * theta_a / c;
    const double one_minus_q = inv_mu / c;
    const double log_scale = noise / mu;
    double sum = 0.0;
    double q_pow = 1.0;
    for (int i = 0; i < comp.shape; ++i) {
        sum += q_pow * one_minus_q * numeric::scaled_regularized_upper_gamma_int(i + 1, c * lo, log_scale);
        q_pow *= q;
    }
    return sum;
}

// beta^m (beta + theta_T/mu)^{-m}: Laplace factor of the TUE tail against Gamma(m, beta).
double tail_shrink(const Component& comp, double theta_t, double mu)
{
    return std::pow(comp.rate / (comp.rate + theta_t / mu), comp.shape);
}

// Smallest y (on a doubling grid) with Q(m, y) below the given mass.
double gamma_upper_cap(int shape, double mass)
{
    double y = std::max(1.0, static_cast<double>(shape));
    while (numeric::regularized_upper_gamma_int(shape, y) > mass)
        y *= 2.0;
    return y;
}

// E3 for theta_A theta_T < 1. Given x_A = a >= theta_A sigma^2 the TUE must
// clear both theta_T (a + sigma^2) and a / theta_A - sigma^2. The first binds
// below a* = theta_A sigma^2 (1 + theta_T) / (1 - theta_A theta_T), the second
// above it. Each Gamma component is integrated in units of its own scale
// (y = beta a), split at the kink.
double p3_below_unit_product(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    const double theta_a = th.aue;
    const double theta_t = th.tue;
    const double mu = link.tue_mean;
    const double a_lo = theta_a * noise;
    const double a_kink = theta_a * noise * (1.0 + theta_t) / (1.0 - theta_a * theta_t);

    numeric::QuadratureOptions opts;
    opts.abs_tol = 2.5e-9;

    double total = 0.0;
    for (const auto& comp : components(link)) {
        if (comp.weight == 0.0)
            continue;
        const double log_norm = -std::lgamma(static_cast<double>(comp.shape));
        auto density = [&](double y) {
            return y > 0.0 ? std::exp((comp.shape - 1) * std::log(y) - y + log_norm) : (comp.shape == 1 ? 1.0 : 0.0);
        };
        const double y_lo = comp.rate * a_lo;
        const double y_kink = comp.rate * a_kink;
        const double y_hi = std::max(gamma_upper_cap(comp.shape, 1e-14), y_lo);

        double part = 0.0;
        if (y_kink > y_lo) {
            auto tue_limited = [&](double y) {
                const double a = y / comp.rate;
                return std::exp(-theta_t * (a + noise) / mu) * density(y);
            };
            part += numeric::integrate_adaptive(tue_limited, y_lo, std::min(y_kink, y_hi), opts).value;
        }
        if (y_hi > std::max(y_kink, y_lo)) {
            auto aue_limited = [&](double y) {
                const double a = y / comp.rate;
                return std::exp(-(a / theta_a - noise) / mu) * density(y);
            };
            part += numeric::integrate_adaptive(aue_limited, std::max(y_kink, y_lo), y_hi, opts).value;
        }
        total += comp.weight * part;
    }
    return total;
}

double p3_closed_form_unit_product(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    const double mu = link.tue_mean;
    double sum = 0.0;
    for (const auto& comp : components(link)) {
        const double c = comp.rate + th.tue / mu;
        sum += comp.weight * tail_shrink(comp, th.tue, mu)
             * numeric::regularized_upper_gamma_int(comp.shape, th.aue * c * noise);
    }
    return std::exp(-th.tue * noise / mu) * sum;
}

double clamp_checked(double p)
{
    assert(p > -1e-9 && p < 1.0 + 1e-9 && "probability outside [0,1] beyond rounding");
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

DecodingThresholds DecodingThresholds::from_db(double aue_db, double tue_db)
{
    return {units::db_to_linear(aue_db), units::db_to_linear(tue_db)};
}

void DecodingThresholds::validate() const
{
    if (!(aue >= 0.0 && tue >= 0.0))
        throw DomainError("SINR thresholds must be nonnegative");
}

double threshold_from_rate(double rate_bps, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw DomainError("bandwidth must be positive");
    if (!(rate_bps >= 0.0))
        throw DomainError("target rate must be nonnegative");
    return std::expm1(rate_bps / bandwidth_hz * std::numbers::ln2);
}

double upper_gamma_int(int s, double x) { return numeric::upper_gamma_int(s, x); }

double p1(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    const double lo = (1.0 + th.tue) * noise;
    double sum = 0.0;
    for (const auto& comp : components(link))
        sum += comp.weight * first_step_tail(comp, th.aue, link.tue_mean, noise, lo);
    return sum;
}

double p2(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    if (th.tue == 0.0)
        return 0.0;
    const double lo = noise;
    const double hi = (1.0 + th.tue) * noise;
    double sum = 0.0;
    for (const auto& comp : components(link)) {
        sum += comp.weight * (first_step_tail(comp, th.aue, link.tue_mean, noise, lo)
                              - first_step_tail(comp, th.aue, link.tue_mean, noise, hi));
    }
    return sum;
}

bool p3_uses_quadrature(const DecodingThresholds& th) { return th.aue > 0.0 && th.aue * th.tue < 1.0; }

double p3(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    if (th.aue == 0.0)
        return 0.0;
    if (th.aue * th.tue >= 1.0)
        return p3_closed_form_unit_product(link, th, noise);
    return p3_below_unit_product(link, th, noise);
}

double p3_legacy_closed_form(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    if (th.aue * th.tue >= 1.0)
        return p3_closed_form_unit_product(link, th, noise);

    const double mu = link.tue_mean;
    const double theta_a = th.aue;
    const double theta_t = th.tue;
    auto term = [&](const Component& comp, double shifted_rate) {
        const double ratio = std::isinf(shifted_rate) ? 0.0 : std::pow(comp.rate / shifted_rate, comp.shape);
        return comp.weight * ratio
             * numeric::scaled_regularized_upper_gamma_int(comp.shape, (comp.rate * theta_a + 1.0 / mu) * noise,
                                                           noise / mu);
    };
    const auto comps = components(link);
    // Legacy form: the LoS term shifts by 1/(theta_A mu), the NLoS term by 1/(theta_T mu).
    const double los = term(comps[0], comps[0].rate + 1.0 / (theta_a * mu));
    const double nlos = term(comps[1], comps[1].rate + 1.0 / (theta_t * mu));
    const double correction = 0.5 * theta_a * theta_t * theta_t * noise * noise * (1.0 + theta_a) * (1.0 + theta_a)
                            / (1.0 - theta_a * theta_t);
    return los + nlos - correction;
}

double p4(const NakagamiLinkParams& link, const DecodingThresholds& th, double noise)
{
    if (th.aue == 0.0)
        return 0.0;
    const double mu = link.tue_mean;
    double sum = 0.0;
    for (const auto& comp : components(link)) {
        const double c = comp.rate + th.tue / mu;
        sum += comp.weight * tail_shrink(comp, th.tue, mu)
             * numeric::regularized_lower_gamma_int(comp.shape, th.aue * c * noise);
    }
    return std::exp(-th.tue * noise / mu) * sum;
}

std::string to_string(Method method)
{
    switch (method) {
    case Method::analytic:
        return "analytic";
    case Method::semi_analytic:
        return "semi_analytic";
    case Method::monte_carlo:
        return "monte_carlo";
    }
    return "unknown";
}

CoverageReport assemble_report(double p1, double p2, double p3, double p4, Method method)
{
    CoverageReport r;
    r.p1 = clamp_checked(p1);
    r.p2 = clamp_checked(p2);
    r.p3 = clamp_checked(p3);
    r.p4 = clamp_checked(p4);
    r.p_tot = clamp_checked(r.p1 + r.p3);
    r.p_aue = clamp_checked(r.p1 + r.p2 + r.p3);
    r.p_tue = clamp_checked(r.p1 + r.p3 + r.p4);
    r.p5_residual = clamp_checked(1.0 - (r.p1 + r.p2 + r.p3 + r.p4));
    r.method = method;
    return r;
}

CoverageReport coverage_report(const channel::SystemParams& params, const channel::LosModel& los, double r_a,
                               double h_a, const DecodingThresholds& th)
{
    th.validate();
    const double p_los = channel::los_probability(los, r_a, h_a, params.bs_height);
    const auto link = channel::make_link(params, p_los, channel::aue_distance(params, r_a, h_a));
    const double noise = params.noise_power;
    const Method method = p3_uses_quadrature(th) ? Method::semi_analytic : Method::analytic;
    return assemble_report(p1(link, th, noise), p2(link, th, noise), p3(link, th, noise), p4(link, th, noise),
                           method);
}

CoverageReport coverage_report(const channel::SystemParams& params, const channel::LosModel& los,
                               const trajectory::TrajectoryPoint& point, const DecodingThresholds& th)
{
    return coverage_report(params, los, point.r_a, point.h_a, th);
}

} // namespace uavnoma::analysis
