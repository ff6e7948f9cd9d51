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

#ifndef UAVNOMA_CHANNEL_HPP
#define UAVNOMA_CHANNEL_HPP

#include <map>
#include <string>
#include <variant>

namespace uavnoma::channel {

/// Physical and link parameters of the single-cell uplink, all linear SI.
struct SystemParams
{
    double cell_radius = 500.0;     ///< R, m
    double bs_height = 30.0;        ///< h_B, m
    double noise_power = 1e-13;     ///< sigma^2, W (-100 dBm)
    double aue_tx_power = 0.1;      ///< P_A, W
    double aue_gain = 1.0;          ///< G_A
    double tue_gain = 1.0;          ///< G_T
    double tue_cutoff_power = 3.1622776601683794e-11; ///< rho, W (-75 dBm)
    double alpha_tue = 3.5;         ///< terrestrial path-loss exponent
    double alpha_los = 2.2;
    double alpha_nlos = 3.5;
    double eta_los = 1.0;           ///< extra attenuation as a gain in (0, 1]
    double eta_nlos = 0.05011872336272722; ///< 13 dB
    int m_los = 5;                  ///< Nakagami shapes, positive integers
    int m_nlos = 1;
    double bandwidth = 10e6;        ///< B, Hz

    /// The reference parameter set: R = 500 m, h_B = 30 m, sigma^2 = -100 dBm,
    /// rho = -75 dBm, P_A = 0.1 W, unit gains, exponents 3.5 / 2.2 / 3.5,
    /// eta 0 dB / 13 dB, m = 5 / 1, B = 10 MHz.
    static SystemParams reference();

    /// Throws DomainError naming the first violated invariant.
    void validate() const;

    /// Mean TUE received power, mu = rho * G_T.
    double tue_mean_power() const { return tue_cutoff_power * tue_gain; }
};

/// Built-up environment of the ITU LoS model.
struct LosEnvironment
{
    double built_up_ratio;      ///< alpha_ITU in (0, 1]
    double buildings_per_km2;   ///< beta_ITU
    double height_scale;        ///< delta_ITU, Rayleigh scale of building heights, m

    void validate() const;
};

/// Built-in environment presets: "suburban", "urban", "dense-urban",
/// "high-rise". Only "urban" (0.3, 500, 15) is pinned by the analysis this
/// library reproduces; the other three follow the ITU-R P.1410 table and are
/// meant to be overridden from config when a different source is used.
const std::map<std::string, LosEnvironment>& environment_presets();

struct ItuLos
{
    LosEnvironment env;
};

/// Urban-macro aerial LoS model for BS antennas above rooftop,
/// valid for 22.5 m < h_A <= 300 m.
struct ThreeGppUrbanLos
{
};

/// Constant LoS probability; used as a test seam.
struct FixedLos
{
    double probability;
};

using LosModel = std::variant<ItuLos, ThreeGppUrbanLos, FixedLos>;

/// Short label used in CSV output: the preset name is not known here, so ITU
/// models report "itu"; the CLI substitutes the preset name.
std::string los_model_label(const LosModel& model);

/// LoS probability between an AUE at horizontal distance r_a and altitude h_a
/// and a BS at height h_b.
///
/// ITU: product over the m_ITU + 1 buildings crossed by the link, with
/// m_ITU = floor(r_a * sqrt(alpha * beta) / 1000 - 1). beta is per km^2 and
/// r_a in metres, hence the /1000. An empty product (m_ITU < 0) is exactly 1.
///
/// Throws DomainError for r_a < 0, and for ThreeGppUrbanLos when h_a is
/// outside (22.5, 300].
double los_probability(const LosModel& model, double r_a, double h_a, double h_b);

/// eta_v * d^(-alpha_v) for the LoS or NLoS A2C link.
double a2c_path_loss(const SystemParams& params, double d_a, bool los);

/// Channel-inversion transmit power rho * d_T^alpha_T.
/// d_t must lie in [h_B, sqrt(R^2 + h_B^2)].
double tue_transmit_power(const SystemParams& params, double d_t);

double tue_distance(const SystemParams& params, double r_t);
double aue_distance(const SystemParams& params, double r_a, double h_a);

/// Density of the TUE-BS 3D distance: 2z / R^2 on [h_B, sqrt(R^2 + h_B^2)].
double tue_distance_pdf(const SystemParams& params, double z);

/// TUE received power is exponential with mean rho * G_T regardless of the
/// path-loss exponent and of where the TUE sits.
double tue_power_cdf(const SystemParams& params, double x);
double tue_power_pdf(const SystemParams& params, double x);

/// The distribution of the AUE received power at one trajectory point: a
/// LoS/NLoS mixture of two Gamma laws with integer shapes and the given rates.
struct NakagamiLinkParams
{
    double rate_los;    ///< beta_L = m_L / (P_A eta_L d^-alpha_L G_A), 1/W
    double rate_nlos;   ///< beta_N, 1/W
    double p_los;
    int m_los;
    int m_nlos;
    double tue_mean;    ///< mu = rho G_T, W
};

NakagamiLinkParams make_link(const SystemParams& params, double p_los, double d_a);

double aue_power_cdf(const NakagamiLinkParams& link, double x);
double aue_power_pdf(const NakagamiLinkParams& link, double x);
double aue_power_cdf(const SystemParams& params, double p_los, double d_a, double x);
double aue_power_pdf(const SystemParams& params, double p_los, double d_a, double x);

} // namespace uavnoma::channel

#endif
