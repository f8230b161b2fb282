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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uam/geometry.hpp"
#include "uam/manifest.hpp"
#include "uam/sim.hpp"
#include "uam/scenario.hpp"
#include "uamcli/commands.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kRunError = 1, kConfigError = 2, kUsageError = 3 };

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> drops;
    std::optional<unsigned> workers;
    std::string out_dir;
    std::optional<double> imd;
    std::optional<int> n_beam;
    std::optional<int> delta;
    std::optional<double> tilt_deg;
    std::vector<std::string> toggles;
    std::vector<std::string> sets;
};

void print_error(const std::string& message, const std::vector<std::string>& problems)
{
    nlohmann::ordered_json e;
    e["error"] = message;
    e["problems"] = problems;
    std::cerr << e.dump(2) << '\n';
}

std::string toggle_assignment(const std::string& spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw uam::ConfigError({"toggle must look like name=on|off: " + spec});
    std::string name = spec.substr(0, eq);
    const std::string state = spec.substr(eq + 1);
    if (name == "tilt")
        name = "tilt_opt";
    if (state != "on" && state != "off")
        throw uam::ConfigError({"toggle " + name + " must be on or off, got " + state});
    return "toggles." + name + "=" + (state == "on" ? "true" : "false");
}

// Config file, then flags; every problem from every stage is collected before failing.
uam::ScenarioConfig resolve_config(const GlobalOptions& g)
{
    uam::ScenarioConfig cfg = g.config_path.empty() ? uam::ScenarioConfig{} : uam::load_config(g.config_path);
    std::vector<std::string> problems;
    const auto apply = [&](auto&& make_assignment) {
        try {
            uam::apply_override(cfg, make_assignment());
        } catch (const uam::ConfigError& e) {
            problems.insert(problems.end(), e.problems().begin(), e.problems().end());
        }
    };
    for (const auto& a : g.sets)
        apply([&] { return a; });
    for (const auto& t : g.toggles)
        apply([&] { return toggle_assignment(t); });
    if (g.seed)
        cfg.study.seed = *g.seed;
    if (g.drops)
        cfg.study.drops = *g.drops;
    if (g.workers)
        cfg.study.workers = *g.workers;
    if (g.imd) {
        cfg.grid.imd = *g.imd;
        if (*g.imd > 0.0)
            cfg.spatial.lambda_M = uam::hex_grid_density_per_km2(*g.imd);
    }
    if (g.n_beam)
        cfg.beams.n_beam = *g.n_beam;
    if (g.delta)
        cfg.beams.delta = *g.delta;
    if (g.tilt_deg)
        cfg.tilt.baseline_deg = *g.tilt_deg;
    const auto v = cfg.violations();
    problems.insert(problems.end(), v.begin(), v.end());
    if (!problems.empty())
        throw uam::ConfigError(std::move(problems));
    return cfg;
}

fs::path resolve_out_dir(const GlobalOptions& g)
{
    if (!g.out_dir.empty())
        return g.out_dir;
    if (const char* env = std::getenv("UAMNET_OUT_DIR"); env && *env)
        return env;
    return "out";
}

int run(const std::string& name, const GlobalOptions& g, const std::string& command_line,
        const std::function<uam::cli::CommandResult(const uam::ScenarioConfig&)>& body)
{
    uam::ScenarioConfig cfg;
    try {
        cfg = resolve_config(g);
    } catch (const uam::ConfigError& e) {
        print_error("invalid configuration", e.problems());
        return kConfigError;
    } catch (const std::exception& e) {
        print_error("invalid configuration", {e.what()});
        return kConfigError;
    }
    const fs::path dir = resolve_out_dir(g);
    const std::string config_json = uam::dump_config(cfg);
    std::optional<uam::RunManifest> manifest;
    try {
        fs::create_directories(dir);
        manifest.emplace(dir / (name + ".manifest.json"), command_line, config_json, cfg.study.seed);
        const fs::path config_out = dir / (name + ".config.json");
        std::ofstream(config_out) << config_json << '\n';
        manifest->add_output(config_out);
        const uam::cli::CommandResult result = body(cfg);
        for (const auto& p : uam::cli::write_tables(result, dir))
            manifest->add_output(p);
        manifest->finish(true);
        for (const auto& [key, value] : result.scalars)
            std::cout << key << '=' << value << '\n';
        for (const auto& p : manifest->outputs())
            std::cout << "wrote " << p << '\n';
        return kOk;
    } catch (const uam::ConfigError& e) {
        if (manifest)
            manifest->finish(false, e.what());
        print_error("invalid configuration", e.problems());
        return kConfigError;
    } catch (const std::exception& e) {
        if (manifest)
            manifest->finish(false, e.what());
        print_error(name + " failed", {e.what()});
        return kRunError;
    }
}

std::vector<double> parse_values(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size())
            throw std::invalid_argument("sweep: bad value '" + item + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"uamnet: cellular command-and-control links for urban air mobility"};
    app.set_version_flag("--version", std::string(uam::version()));
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.config_path, "Scenario JSON; omitted keys keep their defaults")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "Base seed");
    app.add_option("--drops", g.drops, "Independent drops per evaluation point");
    app.add_option("--workers", g.workers, "Worker threads (0 = hardware concurrency)");
    app.add_option("--out-dir", g.out_dir, "Output directory (default $UAMNET_OUT_DIR, else ./out)");
    app.add_option("--imd", g.imd, "Grid inter-site distance in m; also sets lambda_M to the matching density");
    app.add_option("--n-beam", g.n_beam, "Beams per sector");
    app.add_option("--delta", g.delta, "Sector reuse factor");
    app.add_option("--tilt-deg", g.tilt_deg, "Baseline tilt in degrees (positive is downward)");
    app.add_option("--toggle", g.toggles, "tilt|reuse|multi_layer|master=on|off (repeatable)");
    app.add_option("--set", g.sets, "Config override section.key=value (repeatable)");

    std::string command_line;
    for (int i = 0; i < argc; ++i)
        command_line += (i ? " " : "") + std::string(argv[i]);

    auto* blockage = app.add_subcommand("blockage", "Blockage counting checks");
    blockage->require_subcommand(1);
    auto* audit = blockage->add_subcommand("audit", "Condition-based count vs segment-box oracle per link");
    std::size_t links = 10000;
    audit->add_option("--links", links, "Random MBS-UAM links")->check(CLI::PositiveNumber);

    auto* analytics = app.add_subcommand("analytics", "Analytic coverage vs threshold and vs height");
    auto* tilt = app.add_subcommand("tilt-opt", "Optimal tilt vs UAM height");

    auto* cov = app.add_subcommand("coverage", "Analytic coverage at one threshold plus the full curve");
    double threshold_db = 0.0;
    cov->add_option("--threshold-db", threshold_db, "SINR threshold in dB");

    auto* sim = app.add_subcommand("simulate", "Time-stepped mobility reliability study");
    std::size_t seeds = 1;
    sim->add_option("--seeds", seeds, "Consecutive seeds pooled")->check(CLI::PositiveNumber);

    auto* sw = app.add_subcommand("sweep", "Simulated coverage over one parameter");
    std::string param;
    std::string values;
    std::string allowed;
    for (const auto& p : uam::sweep_parameters())
        allowed += (allowed.empty() ? "" : "|") + p;
    sw->add_option("--param", param, allowed)->required();
    sw->add_option("--values", values, "Comma-separated grid")->required();

    auto* rep = app.add_subcommand("reproduce", "Data series behind one figure");
    std::string figure;
    rep->add_option("figure", figure, "Figure id")->required()->check(CLI::IsMember(uam::cli::figure_ids()));
    rep->add_option("--seeds", seeds, "Consecutive seeds for mobility figures")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("bad command line", {e.what()});
        return kUsageError;
    }

    using uam::ScenarioConfig;
    if (*audit)
        return run("blockage_audit", g, command_line,
                   [&](const ScenarioConfig& c) { return uam::cli::blockage_audit(c, links); });
    if (*analytics)
        return run("analytics", g, command_line, [](const ScenarioConfig& c) { return uam::cli::analytics_tables(c); });
    if (*tilt)
        return run("tilt_opt", g, command_line, [](const ScenarioConfig& c) { return uam::cli::tilt_table(c); });
    if (*cov)
        return run("coverage", g, command_line,
                   [&](const ScenarioConfig& c) { return uam::cli::coverage(c, threshold_db); });
    if (*sim)
        return run("simulate", g, command_line, [&](const ScenarioConfig& c) { return uam::cli::simulate(c, seeds); });
    if (*sw)
        return run("sweep_" + param, g, command_line, [&](const ScenarioConfig& c) {
            return uam::cli::sweep_table(c, param, parse_values(values));
        });
    if (*rep)
        return run(figure, g, command_line,
                   [&](const ScenarioConfig& c) { return uam::cli::reproduce(figure, c, seeds); });
    return kUsageError;
}
