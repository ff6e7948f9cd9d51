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

#include "uavnoma/channel.hpp"

#include "uavnoma/errors.hpp"
#include "uavnoma/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uavnoma::channel {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

double itu_los(const LosEnvironment& env, double r_a, double h_a, double h_b)
{
    const double crossings = r_a * std::sqrt(env.built_up_ratio * env.buildings_per_km2) / 1000.0 - 1.0;
    const double m_itu = std::floor(crossings);
    if (m_itu < 0.0)
        return 1.0;

    const double two_var = 2.0 * env.height_scale * env.height_scale;
    const auto buildings = static_cast<long>(m_itu) + 1;
    double p = 1.0;
    for (long n = 0; n < buildings; ++n) {
        // Ray height above the n-th building position.
        const double h = h_a - (n + 0.5) * (h_a - h_b) / static_cast<double>(buildings);
        p *= clamp_probability(1.0 - std::exp(-h * h / two_var));
    }
    return p;
}

double three_gpp_urban_los(double r_a, double h_a)
{
    if (!(h_a > 22.5 && h_a <= 300.0))
        throw DomainError("3GPP urban LoS model requires 22.5 m < h_A <= 300 m, got " + std::to_string(h_a));
    if (h_a > 100.0)
        return 1.0;
    const double d1 = std::max(294.05 * std::log10(h_a) - 432.94, 18.0);
    if (r_a <= d1)
        return 1.0;
    const double p1 = 233.98 * std::log10(h_a) - 0.95;
    return clamp_probability(d1 / r_a + std::exp(-r_a / p1) * (1.0 - d1 / r_a));
}

} // namespace

SystemParams SystemParams::reference() { return SystemParams{}; }

void SystemParams::validate() const
{
    require(cell_radius > 0.0, "cell radius R must be positive");
    require(bs_height >= 0.0, "BS height h_B must be nonnegative");
    require(noise_power > 0.0, "noise power must be positive");
    require(tue_cutoff_power > noise_power, "TUE cutoff power rho must exceed the noise power");
    require(aue_gain > 0.0 && tue_gain > 0.0, "antenna gains must be positive");
    require(aue_tx_power > 0.0, "AUE transmit power must be positive");
    require(m_los >= 1 && m_nlos >= 1, "Nakagami shapes must be integers >= 1");
    require(alpha_los > 0.0 && alpha_nlos > 0.0 && alpha_tue > 0.0, "path-loss exponents must be positive");
    require(eta_los > 0.0 && eta_los <= 1.0 && eta_nlos > 0.0 && eta_nlos <= 1.0,
            "attenuation gains eta must lie in (0, 1]");
    require(bandwidth > 0.0, "bandwidth must be positive");
}

void LosEnvironment::validate() const
{
    require(built_up_ratio > 0.0 && built_up_ratio <= 1.0, "ITU built-up ratio must lie in (0, 1]");
    require(buildings_per_km2 > 0.0, "ITU building density must be positive");
    require(height_scale > 0.0, "ITU building height scale must be positive");
}

const std::map<std::string, LosEnvironment>& environment_presets()
{
    static const std::map<std::string, LosEnvironment> presets = {
        {"suburban", {0.1, 750.0, 8.0}},
        {"urban", {0.3, 500.0, 15.0}},
        {"dense-urban", {0.5, 300.0, 20.0}},
        {"high-rise", {0.5, 300.0, 50.0}},
    };
    return presets;
}

std::string los_model_label(const LosModel& model)
{
    struct Visitor
    {
        std::string operator()(const ItuLos&) const { return "itu"; }
        std::string operator()(const ThreeGppUrbanLos&) const { return "3gpp"; }
        std::string operator()(const FixedLos&) const { return "fixed"; }
    };
    return std::visit(Visitor{}, model);
}

double los_probability(const LosModel& model, double r_a, double h_a, double h_b)
{
    if (!(r_a >= 0.0))
        throw DomainError("horizontal distance r_A must be nonnegative");
    if (const auto* itu = std::get_if<ItuLos>(&model))
        return itu_los(itu->env, r_a, h_a, h_b);
    if (std::holds_alternative<ThreeGppUrbanLos>(model))
        return three_gpp_urban_los(r_a, h_a);
    const double p = std::get<FixedLos>(model).probability;
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("fixed LoS probability must lie in [0, 1]");
    return p;
}

double a2c_path_loss(const SystemParams& params, double d_a, bool los)
{
    if (!(d_a > 0.0))
        throw DomainError("A2C distance must be positive");
    return los ? params.eta_los * std::pow(d_a, -params.alpha_los)
               : params.eta_nlos * std::pow(d_a, -params.alpha_nlos);
}

double tue_transmit_power(const SystemParams& params, double d_t)
{
    const double d_max = std::hypot(params.cell_radius, params.bs_height);
    if (!(d_t >= params.bs_height && d_t <= d_max * (1.0 + 1e-12)))
        throw DomainError("TUE distance outside [h_B, sqrt(R^2 + h_B^2)]");
    return params.tue_cutoff_power * std::pow(d_t, params.alpha_tue);
}

double tue_distance(const SystemParams& params, double r_t) { return std::hypot(r_t, params.bs_height); }

double aue_distance(const SystemParams& params, double r_a, double h_a)
{
    return std::hypot(r_a, h_a - params.bs_height);
}

double tue_distance_pdf(const SystemParams& params, double z)
{
    const double r2 = params.cell_radius * params.cell_radius;
    if (z < params.bs_height || z > std::sqrt(r2 + params.bs_height * params.bs_height))
        return 0.0;
    return 2.0 * z / r2;
}

double tue_power_cdf(const SystemParams& params, double x)
{
    if (x <= 0.0)
        return 0.0;
    return -std::expm1(-x / params.tue_mean_power());
}

double tue_power_pdf(const SystemParams& params, double x)
{
    if (x < 0.0)
        return 0.0;
    const double mu = params.tue_mean_power();
    return std::exp(-x / mu) / mu;
}

NakagamiLinkParams make_link(const SystemParams& params, double p_los, double d_a)
{
    if (!(p_los >= 0.0 && p_los <= 1.0))
        throw DomainError("LoS probability must lie in [0, 1]");
    const double los_mean = params.aue_tx_power * a2c_path_loss(params, d_a, true) * params.aue_gain;
    const double nlos_mean = params.aue_tx_power * a2c_path_loss(params, d_a, false) * params.aue_gain;
    return {params.m_los / los_mean,
            params.m_nlos / nlos_mean,
            p_los,
            params.m_los,
            params.m_nlos,
            params.tue_mean_power()};
}

double aue_power_cdf(const NakagamiLinkParams& link, double x)
{
    if (x <= 0.0)
        return 0.0;
    using numeric::regularized_lower_gamma_int;
    return link.p_los * regularized_lower_gamma_int(link.m_los, link.rate_los * x)
         + (1.0 - link.p_los) * regularized_lower_gamma_int(link.m_nlos, link.rate_nlos * x);
}

double aue_power_pdf(const NakagamiLinkParams& link, double x)
{
    if (x < 0.0)
        return 0.0;
    auto gamma_pdf = [x](int m, double rate) {
        if (x == 0.0)
            return m == 1 ? rate : 0.0;
        // rate^m x^(m-1) e^(-rate x) / (m-1)!, assembled in log space.
        const double y = rate * x;
        return rate * std::exp((m - 1) * std::log(y) - y - std::lgamma(static_cast<double>(m)));
    };
    return link.p_los * gamma_pdf(link.m_los, link.rate_los)
         + (1.0 - link.p_los) * gamma_pdf(link.m_nlos, link.rate_nlos);
}

double aue_power_cdf(const SystemParams& params, double p_los, double d_a, double x)
{
    if (x < 0.0)
        throw DomainError("received power must be nonnegative");
    return aue_power_cdf(make_link(params, p_los, d_a), x);
}

double aue_power_pdf(const SystemParams& params, double p_los, double d_a, double x)
{
    if (x < 0.0)
        throw DomainError("received power must be nonnegative");
    return aue_power_pdf(make_link(params, p_los, d_a), x);
}

} // namespace uavnoma::channel
