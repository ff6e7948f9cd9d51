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

#include "oracles.hpp"

#include "uavnoma/analysis.hpp"
#include "uavnoma/errors.hpp"
#include "uavnoma/trajectory.hpp"

#include <doctest.h>

#include <cmath>

using namespace uavnoma;
using namespace uavnoma::analysis;

namespace {

const channel::SystemParams table = channel::SystemParams::reference();
const channel::LosModel urban = channel::ItuLos{channel::environment_presets().at("urban")};
const double s2 = table.noise_power;

NakagamiLinkParams link_at(double h, int n, int count = 10)
{
    const double r = 500.0 * std::sqrt(static_cast<double>(n) / count);
    const double p_los = channel::los_probability(urban, r, h, table.bs_height);
    return channel::make_link(table, p_los, channel::aue_distance(table, r, h));
}

struct Golden
{
    double h;
    int n;
    DecodingThresholds th;
    double p[4];
};

// Independent mpmath integration over the event regions (tests/golden).
const Golden goldens[] = {
    {120.0, 1, {1.0, 1.0},
     {0.99684145035204191, 0.0031572828979044175, 1.2527669073094173e-6, 6.006291587823978e-9}},
    {25.0, 3, {10.0, 0.01},
     {0.55341660475512572, 3.0650934002978057e-5, 0.41598276748970255, 0.030563605879575836}},
    {25.0, 10, {1e4, 1.0}, {0.083003679286758786, 0.00089902582285102262, 1.1486113096006275e-24, 0.67474195604777912}},
    {60.0, 6, {std::pow(10.0, 0.5), std::pow(10.0, -0.3)},
     {0.89661879973468617, 0.0015690337229658015, 0.091520618503634185, 0.0074153217863860861}},
};

} // namespace

TEST_SUITE("analysis")
{
    TEST_CASE("threshold from rate")
    {
        CHECK(threshold_from_rate(0.0, 10e6) == 0.0);
        CHECK(threshold_from_rate(10e6, 10e6) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(threshold_from_rate(34.6e6, 10e6) == doctest::Approx(10.00433454511795).epsilon(1e-14));
        CHECK_THROWS_AS(threshold_from_rate(1.0, 0.0), DomainError);
        CHECK_THROWS_AS(threshold_from_rate(-1.0, 1.0), DomainError);
        CHECK_THROWS_AS((DecodingThresholds{-1.0, 0.0}.validate()), DomainError);
    }

    TEST_CASE("event probabilities against golden integrals")
    {
        for (const auto& g : goldens) {
            CAPTURE(g.h);
            CAPTURE(g.n);
            const auto link = link_at(g.h, g.n);
            CHECK(p1(link, g.th, s2) == doctest::Approx(g.p[0]).epsilon(1e-10));
            CHECK(p2(link, g.th, s2) == doctest::Approx(g.p[1]).epsilon(1e-9));
            CHECK(std::fabs(p3(link, g.th, s2) - g.p[2]) <= 1e-8);
            CHECK(p4(link, g.th, s2) == doctest::Approx(g.p[3]).epsilon(1e-9));
        }
    }

    TEST_CASE("closed-form E3 against the incomplete-gamma oracle when theta_A theta_T < 1")
    {
        for (double h : {25.0, 90.0, 250.0}) {
            for (int n : {1, 4, 10}) {
                for (auto [ta, tt] : {std::pair{10.0, 0.01}, {3.0, 0.3}, {100.0, 0.001}, {0.5, 1.5}, {1e3, 1e-4}}) {
                    CAPTURE(h);
                    CAPTURE(n);
                    CAPTURE(ta);
                    const auto link = link_at(h, n);
                    const DecodingThresholds th{ta, tt};
                    REQUIRE(p3_uses_quadrature(th));
                    CHECK(std::fabs(p3(link, th, s2) - oracle::p3_case2_closed_form(link, ta, tt, s2)) <= 1e-8);
                }
            }
        }
    }

    TEST_CASE("zero thresholds always decode")
    {
        const auto r = coverage_report(table, urban, 300.0, 80.0, {0.0, 0.0});
        CHECK(r.p1 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.p2 == 0.0);
        CHECK(r.p3 == 0.0);
        CHECK(r.p4 == 0.0);
        CHECK(r.p_tot == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.p_aue == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.p_tue == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("limits of single events")
    {
        const auto link = link_at(60.0, 5);
        CHECK(p1(link, {1e12, 1.0}, s2) < 1e-6);
        CHECK(p2(link, {1e12, 1.0}, s2) < 1e-6);
        CHECK(p3(link, {1e12, 1.0}, s2) < 1e-6);
        CHECK(p3(link, {1e12, 1e-13}, s2) < 1e-6);
        CHECK(p2(link, {10.0, 0.0}, s2) == 0.0);
        CHECK(p4(link, {0.0, 3.0}, s2) == 0.0);
        // theta_T = 0: E4 reduces to the AUE CDF at theta_A sigma^2
        for (double ta : {1.0, 1e3, 1e5})
            CHECK(p4(link, {ta, 0.0}, s2) == doctest::Approx(channel::aue_power_cdf(link, ta * s2)).epsilon(1e-12));
        // theta_T = 0: E1 is just the first-step success, checked by integration
        const double first_step = oracle::region_probability(link, oracle::Region::e1, 100.0, 0.0, s2);
        CHECK(p1(link, {100.0, 0.0}, s2) == doctest::Approx(first_step).epsilon(1e-9));
    }

    TEST_CASE("partition and aggregates on a sweep")
    {
        for (double h : {25.0, 75.0, 150.0, 300.0}) {
            for (int n = 1; n <= 10; ++n) {
                for (double ta_db : {-10.0, 0.0, 10.0, 20.0, 40.0}) {
                    for (double tt_db : {-10.0, 0.0, 10.0}) {
                        const double r = 500.0 * std::sqrt(n / 10.0);
                        const auto rep = coverage_report(table, urban, r, h, DecodingThresholds::from_db(ta_db, tt_db));
                        CHECK(std::fabs(rep.p1 + rep.p2 + rep.p3 + rep.p4 + rep.p5_residual - 1.0) <= 1e-9);
                        CHECK(rep.p_tot <= std::min(rep.p_aue, rep.p_tue) + 1e-15);
                        CHECK(rep.p_tot == doctest::Approx(rep.p1 + rep.p3).epsilon(1e-15));
                    }
                }
            }
        }
    }

    TEST_CASE("p_aue nonincreasing in theta_A, p_tue nonincreasing in theta_T")
    {
        for (double h : {25.0, 120.0}) {
            for (int n : {1, 5, 10}) {
                const double r = 500.0 * std::sqrt(n / 10.0);
                for (double fixed_db : {-5.0, 0.0, 10.0}) {
                    double prev_aue = 2.0;
                    double prev_tue = 2.0;
                    for (double db = -10.0; db <= 40.0; db += 2.5) {
                        const auto a = coverage_report(table, urban, r, h, DecodingThresholds::from_db(db, fixed_db));
                        const auto t = coverage_report(table, urban, r, h, DecodingThresholds::from_db(fixed_db, db));
                        CHECK(a.p_aue <= prev_aue + 1e-9);
                        CHECK(t.p_tue <= prev_tue + 1e-9);
                        prev_aue = a.p_aue;
                        prev_tue = t.p_tue;
                    }
                }
            }
        }
    }

    TEST_CASE("E3 is continuous across theta_A theta_T = 1")
    {
        for (double h : {25.0, 120.0}) {
            for (int n : {1, 10}) {
                const auto link = link_at(h, n);
                for (double ta : {2.0, 10.0, 1000.0}) {
                    const double tt = 1.0 / ta;
                    const double at = p3(link, {ta, tt}, s2);
                    CHECK(!p3_uses_quadrature({ta, tt}));
                    CHECK(std::fabs(p3(link, {ta, tt * (1.0 - 1e-6)}, s2) - at) <= 1e-4);
                    CHECK(std::fabs(p3(link, {ta, tt * (1.0 + 1e-6)}, s2) - at) <= 1e-4);
                }
            }
        }
    }

    TEST_CASE("legacy E3 formula is kept apart from the canonical value")
    {
        const auto link = link_at(25.0, 3);
        const DecodingThresholds case1{10.0, 1.0};
        CHECK(p3_legacy_closed_form(link, case1, s2) == p3(link, case1, s2));
        const DecodingThresholds case2{10.0, 0.01};
        const double legacy = p3_legacy_closed_form(link, case2, s2);
        const double exact = oracle::p3_case2_closed_form(link, 10.0, 0.01, s2);
        CHECK(std::isfinite(legacy));
        // It is not the event probability.
        CHECK(std::fabs(legacy - exact) > 1e-3);
    }

    TEST_CASE("report method tags")
    {
        CHECK(coverage_report(table, urban, 200.0, 50.0, {1.0, 1.0}).method == Method::analytic);
        CHECK(coverage_report(table, urban, 200.0, 50.0, {10.0, 0.01}).method == Method::semi_analytic);
        CHECK(coverage_report(table, urban, 200.0, 50.0, {0.0, 0.01}).method == Method::analytic);
        CHECK(to_string(Method::monte_carlo) == "monte_carlo");
        const auto p = trajectory::TrajectoryPoint::make(1, 120.0, 90.0, 70.0);
        const auto a = coverage_report(table, urban, p, {3.0, 0.5});
        const auto b = coverage_report(table, urban, 150.0, 70.0, {3.0, 0.5});
        CHECK(a.p_tot == b.p_tot);
    }

    TEST_CASE("assemble_report clamps rounding excursions")
    {
        const auto r = assemble_report(1.0 + 1e-12, 0.0, -1e-13, 0.0, Method::analytic);
        CHECK(r.p1 == 1.0);
        CHECK(r.p3 == 0.0);
        CHECK(r.p5_residual == 0.0);
    }
}
