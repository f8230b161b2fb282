// SPDX-FileCopyrightText: Copyright (c) 2026 The uamnet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uam/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uam/units.hpp"

namespace uam {

using nlohmann::json;

namespace {

void append(std::vector<std::string>& out, const std::vector<std::string>& more)
{
    out.insert(out.end(), more.begin(), more.end());
}

std::string join(const std::vector<std::string>& items)
{
    std::string s = "invalid configuration:";
    for (const auto& p : items)
        s += "\n  - " + p;
    return s;
}

json to_json(const ScenarioConfig& c)
{
    json j;
    const auto& s = c.spatial;
    j["spatial"] = {{"lambda_M", s.lambda_M},   {"lambda_U", s.lambda_U}, {"lambda_B", s.lambda_B},
                    {"h_M", s.h_M},             {"h_U_min", s.h_U_min},   {"h_U_max", s.h_U_max},
                    {"W", s.W},                 {"D", s.D},               {"sigma_hB", s.sigma_hB},
                    {"window_half_width", s.window_half_width},           {"clear_mbs_sites", s.clear_mbs_sites}};
    j["layout"] = {{"kind", c.layout == LayoutKind::Grid ? "grid" : "ppp"},
                   {"imd", c.grid.imd},
                   {"rows", c.grid.rows},
                   {"cols", c.grid.cols}};
    j["channel"] = {{"p_tx_dbm", c.channel.p_tx_dbm},
                    {"alpha", c.channel.alpha},
                    {"m", c.channel.m},
                    {"noise_dbm", c.channel.noise_dbm},
                    {"gamma", c.channel.gamma}};
    j["antenna"] = {{"phi_3db", c.antenna.phi_3db},
                    {"theta_3db", c.antenna.theta_3db},
                    {"sla_v", c.antenna.sla_v},
                    {"a_m", c.antenna.a_m},
                    {"pattern_exponent", c.antenna.pattern_exponent}};
    j["beams"] = {{"omni", c.beams.omni},
                  {"sectors", c.beams.sectors},
                  {"n_beam", c.beams.n_beam},
                  {"delta", c.beams.delta},
                  {"sector_offset_deg", c.beams.sector_offset_deg}};
    j["tilt"] = {{"baseline_deg", c.tilt.baseline_deg},
                 {"cruise_target_m", c.tilt.cruise_target_m},
                 {"vtol_target_m", c.tilt.vtol_target_m},
                 {"objective", c.tilt.objective == TiltObjective::Linear ? "linear" : "db"},
                 {"step_deg", c.tilt.step_deg}};
    j["capacity"] = {{"bandwidth_hz", c.capacity.bandwidth_hz},
                     {"tau_R_bits", c.capacity.tau_R_bits},
                     {"t_R_s", c.capacity.t_R_s},
                     {"n_u_sector", c.capacity.n_u_sector}};
    const auto& m = c.mobility;
    j["mobility"] = {{"v_vertical_kmh", m.v_vertical_kmh}, {"v_horizontal_kmh", m.v_horizontal_kmh},
                     {"cruise_min", m.cruise_min},         {"cruise_max", m.cruise_max},
                     {"max_concurrent", m.max_concurrent}, {"dt_s", m.dt_s},
                     {"duration_s", m.duration_s}};
    j["master"] = {{"p_tx_dbm", c.master.p_tx_dbm}, {"bandwidth_hz", c.master.bandwidth_hz}};
    j["quadrature"] = {{"rel_tol", c.quad.rel_tol},
                       {"abs_tol", c.quad.abs_tol},
                       {"max_depth", c.quad.max_depth},
                       {"truncation_factor", c.quad.truncation_factor}};
    j["toggles"] = {{"tilt_opt", c.toggles.tilt_opt},
                    {"reuse", c.toggles.reuse},
                    {"multi_layer", c.toggles.multi_layer},
                    {"master", c.toggles.master}};
    const auto& st = c.study;
    j["study"] = {{"seed", st.seed},
                  {"drops", st.drops},
                  {"workers", st.workers},
                  {"region_half_width", st.region_half_width},
                  {"vtol_ceiling_m", st.vtol_ceiling_m},
                  {"threshold_db", st.threshold_db},
                  {"probe_spacing_m", st.probe_spacing_m},
                  {"probe_heights", st.probe_heights}};
    return j;
}

/// Reads j[section][key] into out, recording a message on type mismatch.
template <class T>
void read(const json& j, const char* section, const char* key, T& out, std::vector<std::string>& errors)
{
    try {
        out = j.at(section).at(key).get<T>();
    } catch (const json::exception&) {
        errors.push_back(std::string(section) + "." + key + " has the wrong type");
    }
}

ScenarioConfig from_json(const json& j, std::vector<std::string>& errors)
{
    ScenarioConfig c;
    auto& s = c.spatial;
    read(j, "spatial", "lambda_M", s.lambda_M, errors);
    read(j, "spatial", "lambda_U", s.lambda_U, errors);
    read(j, "spatial", "lambda_B", s.lambda_B, errors);
    read(j, "spatial", "h_M", s.h_M, errors);
    read(j, "spatial", "h_U_min", s.h_U_min, errors);
    read(j, "spatial", "h_U_max", s.h_U_max, errors);
    read(j, "spatial", "W", s.W, errors);
    read(j, "spatial", "D", s.D, errors);
    read(j, "spatial", "sigma_hB", s.sigma_hB, errors);
    read(j, "spatial", "window_half_width", s.window_half_width, errors);
    read(j, "spatial", "clear_mbs_sites", s.clear_mbs_sites, errors);

    std::string kind;
    read(j, "layout", "kind", kind, errors);
    if (kind == "grid")
        c.layout = LayoutKind::Grid;
    else if (kind == "ppp")
        c.layout = LayoutKind::Ppp;
    else
        errors.push_back("layout.kind must be \"grid\" or \"ppp\"");
    read(j, "layout", "imd", c.grid.imd, errors);
    read(j, "layout", "rows", c.grid.rows, errors);
    read(j, "layout", "cols", c.grid.cols, errors);

    read(j, "channel", "p_tx_dbm", c.channel.p_tx_dbm, errors);
    read(j, "channel", "alpha", c.channel.alpha, errors);
    read(j, "channel", "m", c.channel.m, errors);
    read(j, "channel", "noise_dbm", c.channel.noise_dbm, errors);
    read(j, "channel", "gamma", c.channel.gamma, errors);

    read(j, "antenna", "phi_3db", c.antenna.phi_3db, errors);
    read(j, "antenna", "theta_3db", c.antenna.theta_3db, errors);
    read(j, "antenna", "sla_v", c.antenna.sla_v, errors);
    read(j, "antenna", "a_m", c.antenna.a_m, errors);
    read(j, "antenna", "pattern_exponent", c.antenna.pattern_exponent, errors);

    read(j, "beams", "omni", c.beams.omni, errors);
    read(j, "beams", "sectors", c.beams.sectors, errors);
    read(j, "beams", "n_beam", c.beams.n_beam, errors);
    read(j, "beams", "delta", c.beams.delta, errors);
    read(j, "beams", "sector_offset_deg", c.beams.sector_offset_deg, errors);

    read(j, "tilt", "baseline_deg", c.tilt.baseline_deg, errors);
    read(j, "tilt", "cruise_target_m", c.tilt.cruise_target_m, errors);
    read(j, "tilt", "vtol_target_m", c.tilt.vtol_target_m, errors);
    std::string objective;
    read(j, "tilt", "objective", objective, errors);
    if (objective == "linear")
        c.tilt.objective = TiltObjective::Linear;
    else if (objective == "db")
        c.tilt.objective = TiltObjective::Decibel;
    else
        errors.push_back("tilt.objective must be \"linear\" or \"db\"");
    read(j, "tilt", "step_deg", c.tilt.step_deg, errors);

    read(j, "capacity", "bandwidth_hz", c.capacity.bandwidth_hz, errors);
    read(j, "capacity", "tau_R_bits", c.capacity.tau_R_bits, errors);
    read(j, "capacity", "t_R_s", c.capacity.t_R_s, errors);
    read(j, "capacity", "n_u_sector", c.capacity.n_u_sector, errors);

    auto& m = c.mobility;
    read(j, "mobility", "v_vertical_kmh", m.v_vertical_kmh, errors);
    read(j, "mobility", "v_horizontal_kmh", m.v_horizontal_kmh, errors);
    read(j, "mobility", "cruise_min", m.cruise_min, errors);
    read(j, "mobility", "cruise_max", m.cruise_max, errors);
    read(j, "mobility", "max_concurrent", m.max_concurrent, errors);
    read(j, "mobility", "dt_s", m.dt_s, errors);
    read(j, "mobility", "duration_s", m.duration_s, errors);

    read(j, "master", "p_tx_dbm", c.master.p_tx_dbm, errors);
    read(j, "master", "bandwidth_hz", c.master.bandwidth_hz, errors);

    read(j, "quadrature", "rel_tol", c.quad.rel_tol, errors);
    read(j, "quadrature", "abs_tol", c.quad.abs_tol, errors);
    read(j, "quadrature", "max_depth", c.quad.max_depth, errors);
    read(j, "quadrature", "truncation_factor", c.quad.truncation_factor, errors);

    read(j, "toggles", "tilt_opt", c.toggles.tilt_opt, errors);
    read(j, "toggles", "reuse", c.toggles.reuse, errors);
    read(j, "toggles", "multi_layer", c.toggles.multi_layer, errors);
    read(j, "toggles", "master", c.toggles.master, errors);

    auto& st = c.study;
    read(j, "study", "seed", st.seed, errors);
    read(j, "study", "drops", st.drops, errors);
    read(j, "study", "workers", st.workers, errors);
    read(j, "study", "region_half_width", st.region_half_width, errors);
    read(j, "study", "vtol_ceiling_m", st.vtol_ceiling_m, errors);
    read(j, "study", "threshold_db", st.threshold_db, errors);
    read(j, "study", "probe_spacing_m", st.probe_spacing_m, errors);
    read(j, "study", "probe_heights", st.probe_heights, errors);
    return c;
}

/// Overlays `patch` onto `base`, rejecting keys the schema does not have.
void overlay(json& base, const json& patch, const std::string& path, std::vector<std::string>& errors)
{
    if (!patch.is_object()) {
        errors.push_back((path.empty() ? std::string("configuration") : path) + " must be an object");
        return;
    }
    for (const auto& [key, value] : patch.items()) {
        const std::string where = path.empty() ? key : path + "." + key;
        if (!base.contains(key)) {
            errors.push_back("unknown key " + where);
            continue;
        }
        if (base[key].is_object())
            overlay(base[key], value, where, errors);
        else
            base[key] = value;
    }
}

ScenarioConfig parse_json(const json& patch)
{
    json merged = to_json(ScenarioConfig{});
    std::vector<std::string> errors;
    overlay(merged, patch, "", errors);
    ScenarioConfig cfg = from_json(merged, errors);
    if (errors.empty())
        append(errors, cfg.violations());
    if (!errors.empty())
        throw ConfigError(std::move(errors));
    return cfg;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems))
{
}

std::vector<std::string> ScenarioConfig::violations() const
{
    std::vector<std::string> out = spatial.violations();
    if (layout == LayoutKind::Grid) {
        if (!(grid.imd > 0.0))
            out.emplace_back("layout.imd must be > 0");
        if (grid.rows < 1 || grid.cols < 1)
            out.emplace_back("layout.rows and layout.cols must be >= 1");
    }
    append(out, channel.violations());
    append(out, antenna.violations());
    append(out, beams.violations());
    append(out, capacity.violations());
    append(out, mobility.violations(spatial));
    append(out, master.violations());
    if (!(quad.rel_tol > 0.0) || !(quad.abs_tol > 0.0))
        out.emplace_back("quadrature tolerances must be > 0");
    if (quad.max_depth < 1)
        out.emplace_back("quadrature.max_depth must be >= 1");
    if (!(quad.truncation_factor > 1.0))
        out.emplace_back("quadrature.truncation_factor must be > 1");
    if (!(tilt.step_deg > 0.0 && tilt.step_deg <= 90.0))
        out.emplace_back("tilt.step_deg must be in (0, 90]");
    if (!(tilt.baseline_deg >= -90.0 && tilt.baseline_deg <= 90.0))
        out.emplace_back("tilt.baseline_deg must be in [-90, 90]");
    if (toggles.multi_layer && beams.omni)
        out.emplace_back("toggles.multi_layer requires sector antennas (beams.omni = false)");
    if (study.drops < 1)
        out.emplace_back("study.drops must be >= 1");
    if (!(study.region_half_width > 0.0 && study.region_half_width <= spatial.window_half_width))
        out.emplace_back("study.region_half_width must be in (0, window_half_width]");
    if (!(study.probe_spacing_m > 0.0))
        out.emplace_back("study.probe_spacing_m must be > 0");
    for (double h : study.probe_heights)
        if (!(h >= spatial.h_U_min && h <= spatial.h_U_max)) {
            out.emplace_back("study.probe_heights must lie within [h_U_min, h_U_max]");
            break;
        }
    return out;
}

void validate(const ScenarioConfig& cfg)
{
    if (auto v = cfg.violations(); !v.empty())
        throw ConfigError(std::move(v));
}

ScenarioConfig parse_config(std::string_view json_text)
{
    json patch;
    try {
        patch = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    return parse_json(patch);
}

ScenarioConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError({"cannot open config file " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ScenarioConfig& cfg) { return to_json(cfg).dump(2); }

void apply_override(ScenarioConfig& cfg, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError({"override must look like section.key=value: " + std::string(assignment)});
    const std::string path(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded())
        value = text;
    json patch = json::object();
    json* cursor = &patch;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (dot == std::string::npos) {
            (*cursor)[key] = value;
            break;
        }
        cursor = &(*cursor)[key];
        start = dot + 1;
    }
    json merged = to_json(cfg);
    std::vector<std::string> errors;
    overlay(merged, patch, "", errors);
    if (!errors.empty())
        throw ConfigError(std::move(errors));
    cfg = parse_json(merged);
}

TiltSearch tilt_search(const ScenarioConfig& cfg)
{
    TiltSearch search;
    // A PPP layout is tilted for the hexagonal spacing of the same density.
    search.imd = cfg.layout == LayoutKind::Grid
                     ? cfg.grid.imd
                     : std::sqrt(2.0 / (std::sqrt(3.0) * per_km2_to_per_m2(cfg.spatial.lambda_M)));
    search.h_M = cfg.spatial.h_M;
    search.step_deg = cfg.tilt.step_deg;
    search.objective = cfg.tilt.objective;
    return search;
}

BeamPlanSpec effective_beams(const ScenarioConfig& cfg)
{
    BeamPlanSpec b = cfg.beams;
    if (b.omni)
        return b;
    const TiltSearch search = tilt_search(cfg);
    if (!cfg.toggles.reuse) {
        b.delta = 1;
        b.n_beam = 1;
    }
    b.tilt_deg = cfg.toggles.tilt_opt ? optimal_tilt(cfg.tilt.cruise_target_m, search, cfg.antenna) : cfg.tilt.baseline_deg;
    b.multi_layer = cfg.toggles.multi_layer;
    b.tilt_down_deg = cfg.toggles.tilt_opt ? optimal_tilt(cfg.tilt.vtol_target_m, search, cfg.antenna)
                                           : cfg.tilt.baseline_deg;
    return b;
}

AnalyticModel analytic_model(const ScenarioConfig& cfg)
{
    AnalyticModel m;
    m.spatial = cfg.spatial;
    m.channel = cfg.channel;
    m.antenna = cfg.antenna;
    m.beams = effective_beams(cfg);
    m.quad = cfg.quad;
    m.workers = cfg.study.workers;
    return m;
}

} // namespace uam
