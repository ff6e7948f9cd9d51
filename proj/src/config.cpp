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

#include "uavnoma/config.hpp"

#include "uavnoma/csv.hpp"
#include "uavnoma/errors.hpp"
#include "uavnoma/units.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace uavnoma::config {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"system",
         {"cell_radius_m", "bs_height_m", "noise_dbm", "aue_tx_power_w", "aue_gain", "tue_gain", "tue_cutoff_dbm",
          "alpha_t", "alpha_los", "alpha_nlos", "eta_los_db", "eta_nlos_db", "m_los", "m_nlos", "bandwidth_hz"}},
        {"los", {"model", "environment", "probability", "table_step_m"}},
        {"trajectory", {"type", "rounds", "speed_mps", "period_s", "height_m", "seed", "points", "file"}},
        {"thresholds", {"theta_a_db", "theta_t_db", "theta_a_mbps", "theta_t_mbps"}},
        {"mc", {"trials", "seed", "streams"}},
        {"search", {"h_min_m", "h_max_m", "h_step_m", "qos"}},
        {"output", {"dir"}},
    };
    return keys;
}

bool is_preset_key(const std::string& section, const std::string& key)
{
    return section == "los" && key.rfind("preset_", 0) == 0 && key.size() > 7;
}

double to_double(const std::string& text, const std::string& where)
{
    try {
        return csv::parse_double(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("expected a number, got '" + text + "'", where);
    }
}

std::vector<double> to_doubles(const std::string& text, const std::string& where)
{
    std::vector<double> out;
    for (const auto& field : csv::split_line(text))
        out.push_back(to_double(field, where));
    if (out.empty())
        throw ConfigError("empty list", where);
    return out;
}

std::int64_t to_int(const std::string& text, const std::string& where)
{
    // Accept "1e6" style counts as long as the value is integral.
    const double v = to_double(text, where);
    if (v != std::floor(v) || std::fabs(v) > 9.0e15)
        throw ConfigError("expected an integer, got '" + text + "'", where);
    return static_cast<std::int64_t>(v);
}

std::uint64_t to_seed(const std::string& text, const std::string& where)
{
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("expected an unsigned 64-bit seed, got '" + text + "'", where);
    return v;
}

void apply_override(pt::ptree& tree, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    const auto dot = assignment.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
        throw ConfigError("override must look like section.key=value, got '" + assignment + "'", "--set");
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string section = trim(assignment.substr(0, dot));
    const std::string key = trim(assignment.substr(dot + 1, eq - dot - 1));
    if (section.empty() || key.empty() || key.find('.') != std::string::npos)
        throw ConfigError("override must look like section.key=value, got '" + assignment + "'", "--set");
    tree.put(pt::ptree::path_type(section + '\x1f' + key, '\x1f'), trim(assignment.substr(eq + 1)));
}

std::vector<Threshold> thresholds_from(const pt::ptree& section, const std::string& who, double bandwidth)
{
    const auto db = section.get_optional<std::string>("theta_" + who + "_db");
    const auto rate = section.get_optional<std::string>("theta_" + who + "_mbps");
    const std::string where = "thresholds.theta_" + who;
    if (db && rate)
        throw ConfigError("give thresholds either in dB or as rates, not both", where);
    std::vector<Threshold> out;
    if (rate) {
        for (double mbps : to_doubles(*rate, where + "_mbps")) {
            if (!(mbps > 0.0))
                throw ConfigError("target rate must be positive", where + "_mbps");
            const double linear = analysis::threshold_from_rate(mbps * 1e6, bandwidth);
            out.push_back({units::linear_to_db(linear), linear});
        }
    } else if (db) {
        for (double v : to_doubles(*db, where + "_db"))
            out.push_back({v, units::db_to_linear(v)});
    }
    return out;
}

RunConfig interpret(const pt::ptree& tree)
{
    RunConfig cfg;
    cfg.theta_a = {{0.0, 1.0}, {10.0, 10.0}, {20.0, 100.0}, {30.0, 1000.0}, {40.0, 10000.0}};
    cfg.theta_t = {{0.0, 1.0}};

    for (const auto& [section, body] : tree) {
        const auto known = known_keys().find(section);
        if (known == known_keys().end())
            throw ConfigError("unknown section", "[" + section + "]");
        if (!body.data().empty())
            throw ConfigError("value outside any section", section);
        for (const auto& [key, value] : body) {
            if (!known->second.count(key) && !is_preset_key(section, key))
                throw ConfigError("unknown key", section + "." + key);
            (void)value;
        }
    }

    auto each = [&](const std::string& section, const std::function<void(const std::string&, const std::string&,
                                                                            const std::string&)>& fn) {
        if (const auto body = tree.get_child_optional(section)) {
            for (const auto& [key, value] : *body)
                fn(key, value.data(), section + "." + key);
        }
    };

    auto& s = cfg.system;
    each("system", [&](const std::string& key, const std::string& v, const std::string& where) {
        if (key == "m_los" || key == "m_nlos") {
            const auto m = to_int(v, where);
            if (m < 1 || m > 170)
                throw ConfigError("Nakagami shape must be an integer in 1..170", where);
            (key == "m_los" ? s.m_los : s.m_nlos) = static_cast<int>(m);
            return;
        }
        const double x = to_double(v, where);
        if (key == "cell_radius_m") s.cell_radius = x;
        else if (key == "bs_height_m") s.bs_height = x;
        else if (key == "noise_dbm") s.noise_power = units::dbm_to_watts(x);
        else if (key == "aue_tx_power_w") s.aue_tx_power = x;
        else if (key == "aue_gain") s.aue_gain = x;
        else if (key == "tue_gain") s.tue_gain = x;
        else if (key == "tue_cutoff_dbm") s.tue_cutoff_power = units::dbm_to_watts(x);
        else if (key == "alpha_t") s.alpha_tue = x;
        else if (key == "alpha_los") s.alpha_los = x;
        else if (key == "alpha_nlos") s.alpha_nlos = x;
        else if (key == "eta_los_db") s.eta_los = units::attenuation_db_to_gain(x);
        else if (key == "eta_nlos_db") s.eta_nlos = units::attenuation_db_to_gain(x);
        else if (key == "bandwidth_hz") s.bandwidth = x;
    });
    try {
        s.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what(), "[system]");
    }

    auto& los = cfg.los;
    each("los", [&](const std::string& key, const std::string& v, const std::string& where) {
        if (key == "model") {
            if (v == "itu") los.kind = LosKind::itu;
            else if (v == "3gpp") los.kind = LosKind::three_gpp;
            else if (v == "fixed") los.kind = LosKind::fixed;
            else throw ConfigError("model must be itu, 3gpp or fixed, got '" + v + "'", where);
        } else if (key == "environment") {
            los.environments = csv::split_line(v);
            if (los.environments.empty() || los.environments.front().empty())
                throw ConfigError("empty environment list", where);
        } else if (key == "probability") {
            los.fixed_probability = to_double(v, where);
            if (!(los.fixed_probability >= 0.0 && los.fixed_probability <= 1.0))
                throw ConfigError("probability must lie in [0, 1]", where);
        } else if (key == "table_step_m") {
            los.table_step_m = to_double(v, where);
            if (!(los.table_step_m > 0.0))
                throw ConfigError("step must be positive", where);
        } else {
            const auto values = to_doubles(v, where);
            if (values.size() != 3)
                throw ConfigError("preset needs built_up_ratio,buildings_per_km2,height_scale", where);
            channel::LosEnvironment env{values[0], values[1], values[2]};
            try {
                env.validate();
            } catch (const DomainError& e) {
                throw ConfigError(e.what(), where);
            }
            los.presets[key.substr(7)] = env;
        }
    });
    if (los.kind == LosKind::itu) {
        for (const auto& name : los.environments) {
            if (!los.presets.count(name))
                throw ConfigError("unknown environment '" + name + "'", "los.environment");
        }
    }

    auto& tr = cfg.trajectory;
    each("trajectory", [&](const std::string& key, const std::string& v, const std::string& where) {
        if (key == "type") {
            if (v == "spiral") tr.kind = TrajectoryKind::spiral;
            else if (v == "chord-walk") tr.kind = TrajectoryKind::chord_walk;
            else if (v == "csv") tr.kind = TrajectoryKind::csv;
            else throw ConfigError("type must be spiral, chord-walk or csv, got '" + v + "'", where);
        } else if (key == "rounds") tr.rounds = static_cast<int>(to_int(v, where));
        else if (key == "speed_mps") tr.speed = to_double(v, where);
        else if (key == "period_s") tr.period = to_double(v, where);
        else if (key == "height_m") tr.heights = to_doubles(v, where);
        else if (key == "seed") tr.seed = to_seed(v, where);
        else if (key == "points") tr.points = static_cast<int>(to_int(v, where));
        else if (key == "file") tr.file = v;
    });
    if (tr.kind == TrajectoryKind::csv && tr.file.empty())
        throw ConfigError("csv trajectory needs a file", "trajectory.file");
    if (tr.kind != TrajectoryKind::csv && !tr.file.empty())
        throw ConfigError("a file is only valid with type = csv", "trajectory.file");
    for (double h : tr.heights) {
        if (!(h > 0.0))
            throw ConfigError("heights must be positive", "trajectory.height_m");
    }

    if (const auto th = tree.get_child_optional("thresholds")) {
        if (auto a = thresholds_from(*th, "a", s.bandwidth); !a.empty())
            cfg.theta_a = std::move(a);
        if (auto t = thresholds_from(*th, "t", s.bandwidth); !t.empty())
            cfg.theta_t = std::move(t);
    }

    each("mc", [&](const std::string& key, const std::string& v, const std::string& where) {
        if (key == "trials") cfg.mc.trials = to_int(v, where);
        else if (key == "seed") cfg.mc.seed = to_seed(v, where);
        else if (key == "streams") cfg.mc.stream_count = static_cast<int>(to_int(v, where));
    });

    each("search", [&](const std::string& key, const std::string& v, const std::string& where) {
        const double x = to_double(v, where);
        if (key == "h_min_m") cfg.search.h_min = x;
        else if (key == "h_max_m") cfg.search.h_max = x;
        else if (key == "h_step_m") cfg.search.h_step = x;
        else if (key == "qos") cfg.search.qos = x;
    });

    each("output", [&](const std::string&, const std::string& v, const std::string&) { cfg.output_dir = v; });

    cfg.validate();
    return cfg;
}

RunConfig parse_tree(pt::ptree tree, const std::vector<std::string>& overrides)
{
    for (const auto& o : overrides)
        apply_override(tree, o);
    return interpret(tree);
}

} // namespace

std::vector<std::pair<std::string, channel::LosModel>> LosSelection::models() const
{
    switch (kind) {
    case LosKind::three_gpp:
        return {{"3gpp", channel::ThreeGppUrbanLos{}}};
    case LosKind::fixed:
        return {{"fixed", channel::FixedLos{fixed_probability}}};
    case LosKind::itu:
        break;
    }
    std::vector<std::pair<std::string, channel::LosModel>> out;
    for (const auto& name : environments)
        out.emplace_back(name, channel::ItuLos{presets.at(name)});
    return out;
}

void RunConfig::validate() const
{
    if (theta_a.empty() || theta_t.empty())
        throw ConfigError("threshold lists must be non-empty", "thresholds");
    for (const auto& list : {theta_a, theta_t}) {
        for (const auto& t : list) {
            if (!(t.linear >= 0.0) || !std::isfinite(t.linear))
                throw ConfigError("threshold must be finite and non-negative", "thresholds");
        }
    }
    if (trajectory.heights.empty())
        throw ConfigError("at least one height is required", "trajectory.height_m");
    if (trajectory.kind == TrajectoryKind::spiral)
        trajectory::spiral_point_count({trajectory.rounds, trajectory.speed, trajectory.period, system.cell_radius,
                                        trajectory.heights.front()});
    if (trajectory.kind == TrajectoryKind::chord_walk)
        trajectory::ChordWalkConfig{trajectory.seed, trajectory.points, trajectory.speed, trajectory.period,
                                    system.cell_radius, trajectory.heights.front()}
            .validate();
    mc.validate();
    search.validate();
}

trajectory::Trajectory RunConfig::base_trajectory() const
{
    const double h = trajectory.heights.front();
    switch (trajectory.kind) {
    case TrajectoryKind::spiral:
        return trajectory::spiral_points(
            {trajectory.rounds, trajectory.speed, trajectory.period, system.cell_radius, h});
    case TrajectoryKind::chord_walk:
        return trajectory::chord_walk_points(
            {trajectory.seed, trajectory.points, trajectory.speed, trajectory.period, system.cell_radius, h});
    case TrajectoryKind::csv:
        break;
    }
    return trajectory::read_trajectory_csv_file(trajectory.file, system.cell_radius);
}

std::vector<trajectory::Trajectory> RunConfig::trajectories() const
{
    const auto base = base_trajectory();
    if (trajectory.kind == TrajectoryKind::csv)
        return {base};
    std::vector<trajectory::Trajectory> out;
    for (double h : trajectory.heights) {
        trajectory::Trajectory at_h;
        for (const auto& p : base)
            at_h.push_back(p.at_height(h));
        out.push_back(std::move(at_h));
    }
    return out;
}

RunConfig parse(std::istream& in, const std::vector<std::string>& overrides)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(e.message(), "line " + std::to_string(e.line()));
    }
    return parse_tree(std::move(tree), overrides);
}

RunConfig parse_file(const std::string& path, const std::vector<std::string>& overrides)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(e.message(), path + ":" + std::to_string(e.line()));
    }
    return parse_tree(std::move(tree), overrides);
}

RunConfig defaults(const std::vector<std::string>& overrides) { return parse_tree({}, overrides); }

} // namespace uavnoma::config
