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

#include "uamcli/commands.hpp"

#include <stdexcept>

#include "uam/analytics.hpp"
#include "uam/antenna.hpp"
#include "uam/blockage.hpp"
#include "uam/geometry.hpp"
#include "uam/rng.hpp"
#include "uam/sim.hpp"
#include "uam/units.hpp"

namespace uam::cli {

namespace {

constexpr std::uint64_t kAuditStream = 31;

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

} // namespace

std::vector<double> threshold_grid_db()
{
    std::vector<double> t;
    for (int db = -20; db <= 30; db += 2)
        t.push_back(db);
    return t;
}

std::vector<double> height_grid_m()
{
    std::vector<double> h{1.5};
    for (int k = 1; k <= 12; ++k)
        h.push_back(25.0 * k);
    return h;
}

CommandResult blockage_audit(const ScenarioConfig& cfg, std::size_t links)
{
    validate(cfg);
    const std::uint64_t seed = derive_seed(cfg.study.seed, {kAuditStream});
    SpatialParams spatial = cfg.spatial;
    spatial.lambda_U = 0.0;
    const UrbanEnvironment env = cfg.layout == LayoutKind::Grid ? grid_environment(cfg.grid, spatial, seed)
                                                                : sample_environment(spatial, seed);
    if (env.mbs_sites.empty())
        throw std::runtime_error("blockage: the sampled environment has no MBS");
    Rng rng(derive_seed(seed, {1}));
    std::vector<std::pair<Vec3, Vec3>> pairs;
    pairs.reserve(links);
    for (std::size_t i = 0; i < links; ++i) {
        const Vec3 mbs = env.mbs_sites[rng.below(env.mbs_sites.size())];
        const Vec3 uam = sample_uam_position(rng, env.buildings, env.window_half_width, spatial.h_U_min,
                                             spatial.h_U_max);
        pairs.emplace_back(mbs, uam);
    }
    const auto rows = audit_blockage(pairs, env.buildings);
    CsvTable table({"link_id", "n_condition", "n_oracle", "mismatch"});
    std::size_t mismatches = 0;
    for (const auto& r : rows) {
        table.add({as_int(r.link_id), as_int(r.n_condition), as_int(r.n_oracle), std::int64_t{r.mismatch()}});
        mismatches += r.mismatch();
    }
    CommandResult out;
    out.tables.push_back({"blockage_audit.csv", std::move(table)});
    out.scalars.emplace_back("links", std::to_string(rows.size()));
    out.scalars.emplace_back("mismatches", std::to_string(mismatches));
    return out;
}

CommandResult analytics_tables(const ScenarioConfig& cfg)
{
    validate(cfg);
    const AnalyticModel model = analytic_model(cfg);
    CsvTable by_t({"threshold_db", "coverage", "error"});
    for (double t : threshold_grid_db()) {
        const auto r = coverage_with_reuse(db_to_linear(t), model);
        by_t.add({t, r.value, r.error});
    }
    const double T = db_to_linear(cfg.study.threshold_db);
    CsvTable by_h({"h_U", "coverage", "error"});
    for (double h : height_grid_m()) {
        const auto r = coverage_at_height(T, h, model);
        by_h.add({h, r.value, r.error});
    }
    CommandResult out;
    out.tables.push_back({"analytics_threshold.csv", std::move(by_t)});
    out.tables.push_back({"analytics_height.csv", std::move(by_h)});
    return out;
}

CommandResult tilt_table(const ScenarioConfig& cfg)
{
    validate(cfg);
    const TiltSearch search = tilt_search(cfg);
    CsvTable table({"h_U", "tilt_deg"});
    for (double h : height_grid_m())
        table.add({h, optimal_tilt(h, search, cfg.antenna)});
    CommandResult out;
    out.tables.push_back({"tilt_opt.csv", std::move(table)});
    return out;
}

CommandResult coverage(const ScenarioConfig& cfg, double threshold_db)
{
    validate(cfg);
    const AnalyticModel model = analytic_model(cfg);
    const auto at = coverage_with_reuse(db_to_linear(threshold_db), model);
    CsvTable curve({"threshold_db", "coverage"});
    for (double t : threshold_grid_db())
        curve.add({t, coverage_with_reuse(db_to_linear(t), model).value});
    CommandResult out;
    out.tables.push_back({"coverage_curve.csv", std::move(curve)});
    out.scalars.emplace_back("threshold_db", format_cell(threshold_db));
    out.scalars.emplace_back("coverage", format_cell(at.value));
    out.scalars.emplace_back("error", format_cell(at.error));
    return out;
}

CommandResult simulate(const ScenarioConfig& cfg, std::size_t seeds)
{
    validate(cfg);
    const MobilityResult r = run_mobility_seeds(cfg, seeds);
    CsvTable per_uam({"uam_id", "vtol_success", "vtol_total", "cruise_success", "cruise_total", "reliability"});
    for (const auto& rec : r.records)
        per_uam.add({as_int(rec.uam_id), as_int(rec.vtol_success), as_int(rec.vtol_total),
                     as_int(rec.cruise_success), as_int(rec.cruise_total), rec.reliability()});
    CsvTable summary({"seed", "samples", "overall", "vtol", "cruise", "mean_per_uam", "master_epochs"});
    const auto add = [&](CsvCell seed, const ReliabilitySummary& s) {
        summary.add({std::move(seed), as_int(s.samples), s.overall, s.vtol, s.cruise, s.mean_per_uam,
                     as_int(s.master_epochs)});
    };
    for (std::size_t i = 0; i < r.per_seed.size(); ++i)
        add(static_cast<std::int64_t>(cfg.study.seed + i), r.per_seed[i]);
    add(std::string("pooled"), r.summary);
    CommandResult out;
    out.tables.push_back({"reliability_per_uam.csv", std::move(per_uam)});
    out.tables.push_back({"reliability_summary.csv", std::move(summary)});
    out.scalars.emplace_back("reliability", format_cell(r.summary.overall));
    out.scalars.emplace_back("vtol", format_cell(r.summary.vtol));
    out.scalars.emplace_back("cruise", format_cell(r.summary.cruise));
    return out;
}

CommandResult sweep_table(const ScenarioConfig& cfg, const std::string& parameter, const std::vector<double>& grid)
{
    validate(cfg);
    if (grid.empty())
        throw std::invalid_argument("sweep: the value grid is empty");
    const auto rows = sweep(cfg, parameter, grid);
    CsvTable table({parameter, "coverage", "mean_sinr_db", "p5_sinr_db", "served_fraction"});
    for (const auto& r : rows)
        table.add({r.value, r.coverage, r.mean_sinr_db, r.p5_sinr_db, r.served_fraction});
    CommandResult out;
    out.tables.push_back({"sweep_" + parameter + ".csv", std::move(table)});
    return out;
}

std::vector<std::filesystem::path> write_tables(const CommandResult& result, const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> written;
    for (const auto& t : result.tables) {
        const auto path = dir / t.file;
        t.table.write(path);
        written.push_back(path);
    }
    return written;
}

} // namespace uam::cli
