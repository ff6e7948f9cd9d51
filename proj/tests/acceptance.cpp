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

// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   uavnoma_acceptance            run all criteria
//   uavnoma_acceptance 3 7        run the listed criteria
//
// Exit status is nonzero when any selected criterion fails. Tolerances are
// fixed in this file and must not be relaxed to make a run pass.

#include "oracles.hpp"

#include "uavnoma/analysis.hpp"
#include "uavnoma/channel.hpp"
#include "uavnoma/cli.hpp"
#include "uavnoma/montecarlo.hpp"
#include "uavnoma/planner.hpp"
#include "uavnoma/rng.hpp"
#include "uavnoma/special.hpp"
#include "uavnoma/trajectory.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace uavnoma;

namespace {

// Pinned tolerances
constexpr double kMcSigmas = 3.0;
constexpr double kMcSlack = 1e-4;
constexpr std::int64_t kMcTrials = 1'000'000;
constexpr double kRegionAbsTol = 1e-4;
constexpr int kRegionSets = 24;
constexpr double kPartitionTol = 1e-9;
constexpr double kTrendSlack = 1e-9;
constexpr double kGammaRelTol = 1e-10;
constexpr double kKsLimit = 0.002;
constexpr int kKsSamples = 1'000'000;

struct Outcome
{
    bool pass = true;
    std::string detail;
};

const channel::SystemParams table = channel::SystemParams::reference();
const auto& presets = channel::environment_presets();

channel::LosModel itu(const std::string& name) { return channel::ItuLos{presets.at(name)}; }

trajectory::Trajectory spiral(double h) { return trajectory::spiral_points({3, 15.0, 30.0, 500.0, h}); }

std::string fmt(const char* f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::array<double, 7> probabilities(const analysis::CoverageReport& r)
{
    return {r.p1, r.p2, r.p3, r.p4, r.p_tot, r.p_aue, r.p_tue};
}

const char* const kProbNames[7] = {"p1", "p2", "p3", "p4", "p_tot", "p_aue", "p_tue"};

Outcome criterion_1()
{
    const auto los = itu("urban");
    const montecarlo::McConfig mc{kMcTrials, 20200101, 64};
    int checked = 0;
    int failed = 0;
    double worst = 0.0;   // largest |diff| / bound
    std::string first_failure;
    for (double h : {25.0, 120.0}) {
        for (const auto& point : spiral(h)) {
            for (double ta : {0.0, 10.0, 20.0, 30.0, 40.0}) {
                const auto th = analysis::DecodingThresholds::from_db(ta, 0.0);
                const auto a = probabilities(analysis::coverage_report(table, los, point, th));
                const auto m = probabilities(montecarlo::estimate(table, los, point, th, mc).report);
                for (int i = 0; i < 7; ++i) {
                    const double bound =
                        kMcSigmas * std::sqrt(m[i] * (1.0 - m[i]) / static_cast<double>(kMcTrials)) + kMcSlack;
                    const double diff = std::fabs(a[i] - m[i]);
                    worst = std::max(worst, diff / bound);
                    ++checked;
                    if (!(diff <= bound)) {
                        ++failed;
                        if (first_failure.empty()) {
                            std::ostringstream s;
                            s << "; first miss h=" << h << " n=" << point.n << " theta_A=" << ta << " dB "
                              << kProbNames[i] << " analytic " << a[i] << " MC " << m[i];
                            first_failure = s.str();
                        }
                    }
                }
            }
        }
    }
    return {failed == 0, std::to_string(checked) + " comparisons, " + std::to_string(failed)
                             + " outside 3 sigma + 1e-4, worst |diff|/bound " + fmt("%.3f", worst) + first_failure};
}

Outcome criterion_2()
{
    rng::Stream stream(424242, 0);
    const char* envs[] = {"suburban", "urban", "dense-urban", "high-rise"};
    const double s2 = table.noise_power;
    int below = 0;
    int above = 0;
    double worst = 0.0;
    std::string first_failure;
    for (int k = 0; k < kRegionSets; ++k) {
        // Alternate the branch of theta_A theta_T so both are covered.
        const bool want_below = k % 2 == 0;
        double ta = 0.0;
        double tt = 0.0;
        do {
            ta = std::pow(10.0, (-10.0 + 50.0 * stream.uniform()) / 10.0);
            tt = std::pow(10.0, (-10.0 + 50.0 * stream.uniform()) / 10.0);
        } while ((ta * tt < 1.0) != want_below);
        const double h = 25.0 + 275.0 * stream.uniform();
        const int n = 1 + static_cast<int>(stream.uniform() * 10.0);
        const std::string env = envs[static_cast<int>(stream.uniform() * 4.0)];
        (want_below ? below : above)++;

        const double r = 500.0 * std::sqrt(n / 10.0);
        const double p_los = channel::los_probability(itu(env), r, h, table.bs_height);
        const auto link = channel::make_link(table, p_los, channel::aue_distance(table, r, h));
        const analysis::DecodingThresholds th{ta, tt};
        const double got[4] = {analysis::p1(link, th, s2), analysis::p2(link, th, s2), analysis::p3(link, th, s2),
                               analysis::p4(link, th, s2)};
        const oracle::Region regions[4] = {oracle::Region::e1, oracle::Region::e2, oracle::Region::e3,
                                           oracle::Region::e4};
        for (int i = 0; i < 4; ++i) {
            const double want = oracle::region_probability(link, regions[i], ta, tt, s2);
            const double diff = std::fabs(got[i] - want);
            worst = std::max(worst, diff);
            if (!(diff <= kRegionAbsTol) && first_failure.empty()) {
                std::ostringstream s;
                s << "; first miss set " << k << " p" << i + 1 << " got " << got[i] << " want " << want;
                first_failure = s.str();
            }
        }
    }
    return {first_failure.empty(), std::to_string(kRegionSets) + " sets (" + std::to_string(below) + " with product < 1, "
                                       + std::to_string(above) + " with >= 1), worst abs diff "
                                       + fmt("%.2e", worst) + first_failure};
}

Outcome criterion_3()
{
    const double s2 = table.noise_power;
    int runs = 0;
    double worst = 0.0;
    bool pass = true;
    for (const char* env : {"suburban", "urban", "dense-urban", "high-rise"}) {
        const auto los = itu(env);
        for (double h = 25.0; h <= 300.0; h += 25.0) {
            for (int n = 1; n <= 10; ++n) {
                const double r = 500.0 * std::sqrt(n / 10.0);
                const auto link = channel::make_link(table, channel::los_probability(los, r, h, table.bs_height),
                                                     channel::aue_distance(table, r, h));
                for (double ta = -10.0; ta <= 40.0; ta += 5.0) {
                    for (double tt = -10.0; tt <= 20.0; tt += 5.0) {
                        const auto th = analysis::DecodingThresholds::from_db(ta, tt);
                        const double p[4] = {analysis::p1(link, th, s2), analysis::p2(link, th, s2),
                                             analysis::p3(link, th, s2), analysis::p4(link, th, s2)};
                        const double sum = p[0] + p[1] + p[2] + p[3];
                        const auto rep = analysis::assemble_report(p[0], p[1], p[2], p[3], analysis::Method::analytic);
                        const double total = rep.p1 + rep.p2 + rep.p3 + rep.p4 + rep.p5_residual;
                        worst = std::max({worst, std::fabs(total - 1.0), sum - 1.0});
                        for (double v : p)
                            worst = std::max(worst, -v);
                        ++runs;
                    }
                }
            }
        }
    }
    pass = worst <= kPartitionTol;

    const auto los = itu("urban");
    int mc_runs = 0;
    bool counts_ok = true;
    for (double h : {25.0, 120.0}) {
        for (const auto& point : spiral(h)) {
            for (double ta : {0.0, 20.0, 40.0}) {
                for (std::int64_t trials : {std::int64_t{1}, std::int64_t{997}, std::int64_t{100'003}}) {
                    const montecarlo::McConfig mc{trials, 5, 7};
                    const auto e = montecarlo::estimate(table, los, point, analysis::DecodingThresholds::from_db(ta, 0.0),
                                                        mc);
                    std::int64_t sum = 0;
                    for (auto c : e.counts.by_event)
                        sum += c;
                    counts_ok = counts_ok && sum == trials;
                    ++mc_runs;
                }
            }
        }
    }
    return {pass && counts_ok, std::to_string(runs) + " analytic configurations, worst partition defect "
                                   + fmt("%.2e", worst) + "; " + std::to_string(mc_runs) + " MC runs, counts "
                                   + (counts_ok ? "sum exactly to trials" : "DO NOT sum to trials")};
}

Outcome criterion_4()
{
    const trajectory::SpiralConfig cfg{3, 15.0, 30.0, 500.0, 25.0};
    const int n = trajectory::spiral_point_count(cfg);
    const auto pts = trajectory::spiral_points(cfg);
    const bool pass = n == 10 && pts.size() == 10 && pts.back().r_a == 500.0;
    return {pass, "N = " + std::to_string(n) + ", final r_A = " + fmt("%.17g", pts.back().r_a)};
}

Outcome criterion_5()
{
    const channel::LosModel g = channel::ThreeGppUrbanLos{};
    int checked = 0;
    int off = 0;
    // h in (100, 300]: every r
    for (double h : {100.0 + 1e-9, 100.5, 101.0, 150.0, 200.0, 299.9, 300.0}) {
        for (double r = 0.0; r <= 2000.0; r += 3.7) {
            ++checked;
            off += channel::los_probability(g, r, h, 30.0) != 1.0;
        }
    }
    // r <= d1 for h in (22.5, 100]
    for (double h = 22.5 + 1e-9; h <= 100.0; h += 0.37) {
        const double d1 = std::max(294.05 * std::log10(h) - 432.94, 18.0);
        for (double f : {0.0, 0.1, 0.5, 0.9, 0.999, 1.0}) {
            ++checked;
            off += channel::los_probability(g, f * d1, h, 30.0) != 1.0;
        }
    }
    return {off == 0, std::to_string(checked) + " points, " + std::to_string(off) + " not exactly 1"};
}

Outcome criterion_6()
{
    const auto los = itu("urban");
    const auto th_list = {0.0, 10.0, 20.0, 30.0, 40.0};
    int theta_breaks = 0;
    int height_breaks = 0;
    std::string detail;
    for (double h : {25.0, 120.0}) {
        for (const auto& point : spiral(h)) {
            double prev = 2.0;
            for (double ta : th_list) {
                const double p = analysis::coverage_report(table, los, point, analysis::DecodingThresholds::from_db(ta, 0.0)).p_tot;
                if (p > prev + kTrendSlack) {
                    ++theta_breaks;
                    if (detail.empty())
                        detail = "; first break h=" + fmt("%g", h) + " n=" + std::to_string(point.n);
                }
                prev = p;
            }
        }
    }
    const auto low = spiral(25.0);
    const auto high = spiral(120.0);
    for (std::size_t i = 0; i < low.size(); ++i) {
        const auto th = analysis::DecodingThresholds::from_db(0.0, 0.0);
        if (analysis::coverage_report(table, los, high[i], th).p_tot
            < analysis::coverage_report(table, los, low[i], th).p_tot - kTrendSlack)
            ++height_breaks;
    }
    return {theta_breaks == 0 && height_breaks == 0,
            "p_tot increases with theta_A at " + std::to_string(theta_breaks) + " steps; p_tot(120 m) < p_tot(25 m) at "
                + std::to_string(height_breaks) + " points" + detail};
}

std::string height_text(const std::optional<double>& h) { return h ? fmt("%g m", *h) : std::string("infeasible"); }

Outcome criterion_7()
{
    const planner::HeightSearchConfig search{25.0, 300.0, 1.0, 0.9};
    const auto points = spiral(25.0);
    auto heights = [&](const std::string& env, double ta) {
        std::vector<std::optional<double>> out;
        for (const auto& p : points)
            out.push_back(planner::min_height(table, itu(env), p, analysis::DecodingThresholds::from_db(ta, 0.0), search)
                              .min_height);
        return out;
    };

    std::ostringstream detail;
    bool suburban_ok = true;
    for (double ta : {0.0, 10.0, 20.0}) {
        for (const auto& h : heights("suburban", ta))
            suburban_ok = suburban_ok && h && *h == 25.0;
    }
    detail << "suburban all 25 m: " << (suburban_ok ? "yes" : "NO");

    bool monotone_ok = true;
    for (const char* env : {"urban", "dense-urban"}) {
        for (double ta : {0.0, 10.0, 20.0, 30.0}) {
            const auto hs = heights(env, ta);
            for (std::size_t i = 1; i < hs.size(); ++i) {
                // an infeasible point counts as higher than any height
                const double prev = hs[i - 1] ? *hs[i - 1] : INFINITY;
                const double cur = hs[i] ? *hs[i] : INFINITY;
                if (cur < prev) {
                    monotone_ok = false;
                    detail << "; " << env << " theta_A=" << ta << " dB decreases n=" << i << " " << height_text(hs[i - 1])
                           << " -> n=" << i + 1 << " " << height_text(hs[i]);
                }
            }
        }
    }
    if (monotone_ok)
        detail << "; urban/dense-urban nondecreasing in n: yes";

    bool high_rise_ok = true;
    for (const auto& h : heights("high-rise", 40.0))
        high_rise_ok = high_rise_ok && !h;
    detail << "; high-rise 40 dB infeasible everywhere: " << (high_rise_ok ? "yes" : "NO");
    return {suburban_ok && monotone_ok && high_rise_ok, detail.str()};
}

Outcome criterion_8()
{
    boost::math::quadrature::exp_sinh<double> tail;
    double worst = 0.0;
    for (int s = 1; s <= 10; ++s) {
        for (double x : {0.0, 0.1, 1.0, 5.0, 25.0}) {
            // Log form: pow(t, s - 1) * exp(-t) is inf * 0 far out.
            auto f = [s](double t) {
                if (!std::isfinite(t))
                    return 0.0;
                if (t == 0.0)
                    return s == 1 ? 1.0 : 0.0;
                return std::exp((s - 1) * std::log(t) - t);
            };
            const double want = tail.integrate(f, x, oracle::inf, 1e-15);
            worst = std::max(worst, std::fabs(numeric::upper_gamma_int(s, x) - want) / want);
        }
    }
    return {worst <= kGammaRelTol, "50 pairs, worst relative error " + fmt("%.2e", worst)};
}

Outcome criterion_9()
{
    std::ostringstream detail;
    bool pass = true;
    {
        rng::Stream s(31337, 0);
        std::vector<double> x(kKsSamples);
        for (auto& v : x)
            v = montecarlo::sample_tue_received_power(table, s);
        const double d = oracle::ks_statistic(std::move(x), [](double v) { return channel::tue_power_cdf(table, v); });
        pass = pass && d < kKsLimit;
        detail << "TUE D=" << fmt("%.5f", d);
    }
    int k = 1;
    for (auto [d_a, p_los] : {std::pair{150.0, 0.7}, {50.0, 0.95}, {420.0, 0.2}}) {
        rng::Stream s(31337, static_cast<std::uint64_t>(k++));
        std::vector<double> x(kKsSamples);
        for (auto& v : x)
            v = montecarlo::sample_aue_received_power(table, p_los, d_a, s).power;
        const auto link = channel::make_link(table, p_los, d_a);
        const double d = oracle::ks_statistic(std::move(x), [&](double v) { return channel::aue_power_cdf(link, v); });
        pass = pass && d < kKsLimit;
        detail << "; AUE(d=" << d_a << ", p_los=" << p_los << ") D=" << fmt("%.5f", d);
    }
    return {pass, detail.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion_10()
{
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "uavnoma_acceptance_determinism";
    fs::remove_all(root);

    struct Case
    {
        std::string name;
        std::vector<std::string> args;
        std::string file;
    };
    const std::vector<Case> cases = {
        {"coverage", {"coverage", "--set", "trajectory.height_m=25,120"}, "coverage.csv"},
        {"validate", {"validate", "--trials", "50000", "--seed", "99"}, "coverage.csv"},
        {"min-height", {"min-height", "--set", "los.environment=suburban,urban,high-rise"}, "min_height.csv"},
        {"trajectory-spiral", {"trajectory"}, "trajectory.csv"},
        {"trajectory-chord", {"trajectory", "--set", "trajectory.type=chord-walk", "--set", "trajectory.seed=77"},
         "trajectory.csv"},
        {"los-table", {"los-table", "--set", "los.environment=suburban,urban,dense-urban,high-rise"}, "los_table.csv"},
    };

    int identical = 0;
    std::string mismatches;
    for (const auto& c : cases) {
        std::vector<std::string> outputs;
        for (const char* threads : {"1", "1", "4"}) {
            const fs::path dir = root / (c.name + "_" + threads + "_" + std::to_string(outputs.size()));
            std::vector<std::string> args = {"uavnoma"};
            args.insert(args.end(), c.args.begin(), c.args.end());
            args.insert(args.end(), {"--threads", threads, "--out", dir.string()});
            std::vector<const char*> argv;
            for (const auto& a : args)
                argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            outputs.push_back(code == 0 ? slurp(dir / c.file) : "exit " + std::to_string(code) + ": " + err.str());
        }
        if (outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty())
            ++identical;
        else
            mismatches += "; " + c.name + " differs";
    }
    fs::remove_all(root);
    return {identical == static_cast<int>(cases.size()),
            std::to_string(identical) + "/" + std::to_string(cases.size())
                + " commands byte-identical across two runs and --threads 1/4" + mismatches};
}

struct Criterion
{
    const char* title;
    std::function<Outcome()> run;
};

const std::map<int, Criterion>& criteria()
{
    static const std::map<int, Criterion> all = {
        {1, {"analytic vs Monte Carlo (urban, spiral, h 25/120 m, 10^6 trials)", criterion_1}},
        {2, {"event probabilities vs 2D region integration", criterion_2}},
        {3, {"partition of unity", criterion_3}},
        {4, {"spiral point count and final radius", criterion_4}},
        {5, {"3GPP LoS pinned cases", criterion_5}},
        {6, {"trends in theta_A and height", criterion_6}},
        {7, {"planner findings", criterion_7}},
        {8, {"incomplete gamma vs quadrature", criterion_8}},
        {9, {"received power distributions (KS)", criterion_9}},
        {10, {"determinism across runs and thread counts", criterion_10}},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::stoi(argv[i]));
    if (selected.empty()) {
        for (const auto& [id, c] : criteria())
            selected.push_back(id);
    }

    int failures = 0;
    for (int id : selected) {
        const auto it = criteria().find(id);
        if (it == criteria().end()) {
            std::cerr << "unknown criterion " << id << '\n';
            return 2;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it->second.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << it->second.title << "  ["
                  << o.detail << "] (" << fmt("%.1f", secs) << " s)" << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
