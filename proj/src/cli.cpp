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

#include "uavnoma/cli.hpp"

#include "uavnoma/csv.hpp"
#include "uavnoma/errors.hpp"
#include "uavnoma/montecarlo.hpp"
#include "uavnoma/planner.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace uavnoma::cli {

namespace {

using csv::format_double;

struct CoverageTask
{
    trajectory::TrajectoryPoint point;
    config::Threshold theta_a;
    config::Threshold theta_t;
};

std::vector<std::string> coverage_fields(const CoverageTask& task, const analysis::CoverageReport& r)
{
    return {std::to_string(task.point.n), format_double(task.point.r_a), format_double(task.point.h_a),
            format_double(task.theta_a.db), format_double(task.theta_t.db), format_double(r.p1),
            format_double(r.p2), format_double(r.p3), format_double(r.p4), format_double(r.p_tot),
            format_double(r.p_aue), format_double(r.p_tue), analysis::to_string(r.method)};
}

analysis::DecodingThresholds linear(const config::Threshold& a, const config::Threshold& t)
{
    return {a.linear, t.linear};
}

const channel::LosModel& single_model(const std::vector<std::pair<std::string, channel::LosModel>>& models)
{
    if (models.size() != 1)
        throw ConfigError("coverage needs exactly one LoS environment", "los.environment");
    return models.front().second;
}

// Runs fn(i) for i in [0, count) under OpenMP and rethrows the first failure.
template <typename Fn>
void parallel_for(long count, Fn&& fn)
{
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#pragma omp critical(uavnoma_cli_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw ConfigError("cannot write '" + path.string() + "'", "output.dir");
    file << content;
    if (!file)
        throw ConfigError("failed writing '" + path.string() + "'", "output.dir");
}

} // namespace

bool mc_agrees(const analysis::CoverageReport& analytic, const analysis::CoverageReport& mc, std::int64_t trials)
{
    const std::pair<double, double> pairs[] = {
        {analytic.p1, mc.p1},       {analytic.p2, mc.p2},       {analytic.p3, mc.p3},      {analytic.p4, mc.p4},
        {analytic.p_tot, mc.p_tot}, {analytic.p_aue, mc.p_aue}, {analytic.p_tue, mc.p_tue},
    };
    for (const auto& [a, p_hat] : pairs) {
        if (!(std::fabs(a - p_hat) <= montecarlo::wald_halfwidth(p_hat, trials) + 1e-4))
            return false;
    }
    return true;
}

CoverageOutput coverage_csv(const config::RunConfig& cfg, bool with_monte_carlo)
{
    const auto models = cfg.los.models();
    const auto& los = single_model(models);

    std::vector<CoverageTask> tasks;
    for (const auto& traj : cfg.trajectories())
        for (const auto& point : traj)
            for (const auto& a : cfg.theta_a)
                for (const auto& t : cfg.theta_t)
                    tasks.push_back({point, a, t});

    std::vector<analysis::CoverageReport> analytic(tasks.size());
    parallel_for(static_cast<long>(tasks.size()), [&](long i) {
        const auto& task = tasks[i];
        analytic[i] = analysis::coverage_report(cfg.system, los, task.point, linear(task.theta_a, task.theta_t));
    });

    std::vector<analysis::CoverageReport> mc;
    if (with_monte_carlo) {
        // Each estimate is parallel over its own substreams.
        for (const auto& task : tasks) {
            mc.push_back(montecarlo::estimate(cfg.system, los, task.point, linear(task.theta_a, task.theta_t), cfg.mc)
                             .report);
        }
    }

    std::ostringstream out;
    std::vector<std::string> header = {"n",  "r_A_m", "h_m",   "theta_A_dB", "theta_T_dB", "p1",   "p2",
                                       "p3", "p4",    "p_tot", "p_aue",      "p_tue",      "method"};
    if (with_monte_carlo) {
        header.push_back("ci_halfwidth");
        header.push_back("trials");
    }
    csv::write_row(out, header);

    CoverageOutput result;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto row = coverage_fields(tasks[i], analytic[i]);
        if (with_monte_carlo) {
            row.emplace_back();
            row.emplace_back();
        }
        csv::write_row(out, row);
        if (with_monte_carlo) {
            auto mc_row = coverage_fields(tasks[i], mc[i]);
            mc_row.push_back(format_double(*mc[i].ci_halfwidth));
            mc_row.push_back(std::to_string(cfg.mc.trials));
            csv::write_row(out, mc_row);
            if (!mc_agrees(analytic[i], mc[i], cfg.mc.trials))
                result.agrees = false;
        }
    }
    result.csv = out.str();
    return result;
}

std::string min_height_csv(const config::RunConfig& cfg)
{
    const auto base = cfg.base_trajectory();
    std::ostringstream out;
    csv::write_row(out, {"n", "r_A_m", "theta_A_dB", "theta_T_dB", "env", "min_height_m", "best_height_m",
                         "best_p_tot"});
    for (const auto& [env, los] : cfg.los.models()) {
        for (const auto& a : cfg.theta_a) {
            for (const auto& t : cfg.theta_t) {
                for (const auto& point : base) {
                    const auto r = planner::min_height(cfg.system, los, point, linear(a, t), cfg.search);
                    csv::write_row(out, {std::to_string(point.n), format_double(point.r_a), format_double(a.db),
                                         format_double(t.db), env,
                                         r.min_height ? format_double(*r.min_height) : std::string{},
                                         format_double(r.best_height), format_double(r.best_p_tot)});
                }
            }
        }
    }
    return out.str();
}

std::string trajectory_csv(const config::RunConfig& cfg)
{
    std::ostringstream out;
    trajectory::write_trajectory_csv(out, cfg.base_trajectory());
    return out.str();
}

std::string los_table_csv(const config::RunConfig& cfg)
{
    const double radius = cfg.system.cell_radius;
    const double step = cfg.los.table_step_m;
    const auto steps = static_cast<long>(std::floor(radius / step + 1e-9));
    std::ostringstream out;
    csv::write_row(out, {"env", "h_m", "r_A_m", "elevation_deg", "p_los"});
    for (const auto& [env, los] : cfg.los.models()) {
        for (double h : cfg.trajectory.heights) {
            for (long k = 0; k <= steps; ++k) {
                const double r = k * step;
                const double elevation = std::atan2(h - cfg.system.bs_height, r) * 180.0 / std::numbers::pi;
                const double p = channel::los_probability(los, r, h, cfg.system.bs_height);
                csv::write_row(out, {env, format_double(h), format_double(r), format_double(elevation),
                                     format_double(p)});
            }
        }
    }
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rate coverage of an aerial and a terrestrial user sharing an uplink NOMA resource"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    std::optional<std::string> out_dir;
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    bool validate = false;
    bool strict = false;

    app.add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
    app.add_option("--set", sets, "Override one key, section.key=value (repeatable)");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--threads", threads, "OpenMP threads")->check(CLI::PositiveNumber);

    auto* coverage = app.add_subcommand("coverage", "Analytic event probabilities at every point and threshold");
    coverage->add_flag("--validate", validate, "Add Monte Carlo rows");
    coverage->add_flag("--strict", strict, "Exit with 3 when Monte Carlo disagrees");
    auto* validate_cmd = app.add_subcommand("validate", "Same as coverage --validate");
    validate_cmd->add_flag("--strict", strict, "Exit with 3 when Monte Carlo disagrees");
    auto* min_height = app.add_subcommand("min-height", "Minimum and best AUE height per point");
    auto* traj = app.add_subcommand("trajectory", "Transmission points");
    auto* los_table = app.add_subcommand("los-table", "LoS probability against distance and elevation");
    for (auto* sub : {coverage, validate_cmd, min_height, traj, los_table})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (threads)
            omp_set_num_threads(*threads);

        // Command-line flags win over config file values.
        if (out_dir)
            sets.push_back("output.dir=" + *out_dir);
        if (trials)
            sets.push_back("mc.trials=" + std::to_string(*trials));
        if (seed)
            sets.push_back("mc.seed=" + std::to_string(*seed));
        const auto cfg = config_path.empty() ? config::defaults(sets) : config::parse_file(config_path, sets);

        const std::filesystem::path dir(cfg.output_dir);
        std::filesystem::create_directories(dir);

        int code = exit_ok;
        std::string file;
        if (coverage->parsed() || validate_cmd->parsed()) {
            const auto result = coverage_csv(cfg, validate || validate_cmd->parsed());
            file = "coverage.csv";
            write_file(dir / file, result.csv);
            if (!result.agrees) {
                err << "warning: analytic and Monte Carlo results disagree beyond 3 sigma + 1e-4\n";
                if (strict)
                    code = exit_validation;
            }
        } else if (min_height->parsed()) {
            file = "min_height.csv";
            write_file(dir / file, min_height_csv(cfg));
        } else if (traj->parsed()) {
            file = "trajectory.csv";
            write_file(dir / file, trajectory_csv(cfg));
        } else {
            file = "los_table.csv";
            write_file(dir / file, los_table_csv(cfg));
        }
        out << (dir / file).string() << '\n';
        return code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    }
}

} // namespace uavnoma::cli
