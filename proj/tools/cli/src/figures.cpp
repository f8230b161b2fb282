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

#include <optional>
#include <stdexcept>

#include "uam/analytics.hpp"
#include "uam/antenna.hpp"
#include "uam/sim.hpp"
#include "uam/units.hpp"
#include "uamcli/commands.hpp"

namespace uam::cli {

namespace {

using Runner = CommandResult (*)(const ScenarioConfig&, std::size_t);

// Single-tier analysis setting: omni antennas over a PPP of sites.
ScenarioConfig omni_ppp(ScenarioConfig c)
{
    c.layout = LayoutKind::Ppp;
    c.beams.omni = true;
    c.beams.delta = 1;
    c.beams.n_beam = 1;
    return c;
}

ScenarioConfig with_reuse(ScenarioConfig c)
{
    c.toggles.reuse = true;
    return c;
}

double simulated_coverage(const ScenarioConfig& cfg, double threshold_db, std::optional<double> height = {})
{
    const auto res = run_drops(cfg, {.drops = cfg.study.drops, .height = height});
    return coverage_fraction(res, db_to_linear(threshold_db));
}

double analytic_coverage(const ScenarioConfig& cfg, double threshold_db)
{
    return coverage_with_reuse(db_to_linear(threshold_db), analytic_model(cfg)).value;
}

// Simulated and analytic coverage at the study threshold as one field varies.
template <class Set>
CsvTable parameter_curve(const ScenarioConfig& base, const std::string& column, const std::vector<double>& grid,
                         Set&& set)
{
    CsvTable t({column, "coverage_sim", "coverage_analytic"});
    for (double v : grid) {
        ScenarioConfig c = base;
        set(c, v);
        t.add({v, simulated_coverage(c, c.study.threshold_db), analytic_coverage(c, c.study.threshold_db)});
    }
    return t;
}

CommandResult fig3_3(const ScenarioConfig& cfg, std::size_t)
{
    const ScenarioConfig c = omni_ppp(cfg);
    const auto res = run_drops(c, {.drops = c.study.drops, .height = std::nullopt});
    const AnalyticModel model = analytic_model(c);
    CsvTable curve({"threshold_db", "coverage_sim", "coverage_analytic"});
    for (double t : threshold_grid_db())
        curve.add({t, coverage_fraction(res, db_to_linear(t)),
                   coverage_with_reuse(db_to_linear(t), model).value});
    const MetricsReport rep = probe_report(res, c.study.threshold_db);
    CsvTable quint({"range", "count", "mean_sinr_db", "mean_height", "mean_serving_blockers",
                    "mean_interfering_blockers"});
    for (const auto& q : rep.quintiles)
        quint.add({std::int64_t{q.range}, static_cast<std::int64_t>(q.count), q.mean_sinr_db, q.mean_height,
                   q.mean_serving_blockers, q.mean_interfering_blockers});
    CommandResult out;
    out.tables.push_back({"fig3_3_sinr.csv", std::move(curve)});
    out.tables.push_back({"fig3_3_quintiles.csv", std::move(quint)});
    return out;
}

CommandResult fig3_5b(const ScenarioConfig& cfg, std::size_t)
{
    const ScenarioConfig c = omni_ppp(cfg);
    const AnalyticModel model = analytic_model(c);
    const double T = c.study.threshold_db;
    CsvTable t({"h_U", "coverage_sim", "coverage_analytic"});
    for (double h : height_grid_m())
        t.add({h, simulated_coverage(c, T, h), coverage_at_height(db_to_linear(T), h, model).value});
    CommandResult out;
    out.tables.push_back({"fig3_5b_height.csv", std::move(t)});
    return out;
}

CommandResult fig3_6(const ScenarioConfig& cfg, std::size_t)
{
    const ScenarioConfig c = omni_ppp(cfg);
    CommandResult out;
    out.tables.push_back({"fig3_6a_lambda_B.csv",
                          parameter_curve(c, "lambda_B", {50, 100, 200, 300, 400, 600, 800},
                                          [](ScenarioConfig& s, double v) { s.spatial.lambda_B = v; })});
    out.tables.push_back({"fig3_6b_sigma_hB.csv",
                          parameter_curve(c, "sigma_hB", {5, 10, 15, 20, 30, 40},
                                          [](ScenarioConfig& s, double v) { s.spatial.sigma_hB = v; })});
    return out;
}

CommandResult fig3_7(const ScenarioConfig& cfg, std::size_t)
{
    ScenarioConfig c = omni_ppp(cfg);
    c.layout = LayoutKind::Grid;
    const std::vector<double> imds{250, 500, 750, 1000, 1250, 1500};
    CsvTable cov({"imd", "coverage_sim", "coverage_analytic"});
    std::vector<std::string> header{"threshold_db"};
    std::vector<std::vector<ProbeResult>> runs;
    for (double imd : imds) {
        ScenarioConfig k = c;
        k.grid.imd = imd;
        k.spatial.lambda_M = hex_grid_density_per_km2(imd);
        runs.push_back(run_drops(k, {.drops = k.study.drops, .height = std::nullopt}));
        cov.add({imd, coverage_fraction(runs.back(), db_to_linear(k.study.threshold_db)),
                 analytic_coverage(k, k.study.threshold_db)});
        header.push_back("coverage_imd_" + format_cell(imd));
    }
    CsvTable sinr(header);
    for (double t : threshold_grid_db()) {
        std::vector<CsvCell> row{t};
        for (const auto& r : runs)
            row.emplace_back(coverage_fraction(r, db_to_linear(t)));
        sinr.add(std::move(row));
    }
    CommandResult out;
    out.tables.push_back({"fig3_7_imd.csv", std::move(cov)});
    out.tables.push_back({"fig3_7_sinr.csv", std::move(sinr)});
    return out;
}

CommandResult fig3_8(const ScenarioConfig& cfg, std::size_t)
{
    CommandResult out;
    out.tables.push_back({"fig3_8_h_M.csv", parameter_curve(omni_ppp(cfg), "h_M", {10, 15, 25, 35, 50, 75},
                                                            [](ScenarioConfig& s, double v) { s.spatial.h_M = v; })});
    return out;
}

CommandResult fig4_2(const ScenarioConfig& cfg, std::size_t)
{
    CommandResult out = tilt_table(cfg);
    out.tables.front().file = "fig4_2_tilt.csv";
    return out;
}

CommandResult fig4_5(const ScenarioConfig& cfg, std::size_t)
{
    CommandResult out;
    out.tables.push_back({"fig4_5_beams.csv",
                          parameter_curve(with_reuse(cfg), "n_beam", {1, 2, 3, 4, 5, 6}, [](ScenarioConfig& s, double v) {
                              s.beams.n_beam = static_cast<int>(v);
                          })});
    return out;
}

CommandResult fig4_7(const ScenarioConfig& cfg, std::size_t seeds)
{
    CsvTable t({"n_beam", "overall", "horizontal", "vertical", "reliability_analytic"});
    for (int n = 1; n <= 4; ++n) {
        ScenarioConfig c = with_reuse(cfg);
        c.beams.n_beam = n;
        const auto r = run_mobility_seeds(c, seeds);
        t.add({std::int64_t{n}, r.summary.overall, r.summary.cruise, r.summary.vtol,
               reliability(analytic_model(c), c.capacity)});
    }
    CommandResult out;
    out.tables.push_back({"fig4_7_reliability.csv", std::move(t)});
    return out;
}

CommandResult fig4_10(const ScenarioConfig& cfg, std::size_t)
{
    const ScenarioConfig c = with_reuse(cfg);
    const AnalyticModel model = analytic_model(c);
    const std::vector<double> targets{0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    // The inverted threshold does not depend on bandwidth; the count is linear in it.
    std::vector<Supportable> base;
    for (double R : targets)
        base.push_back(supportable_uams(R, model, c.capacity));
    CsvTable t({"bandwidth_hz", "reliability_target", "feasible", "uams_per_sector", "threshold_db"});
    for (double bw : {10e6, 20e6, 40e6})
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const Supportable& s = base[i];
            t.add({bw, targets[i], std::int64_t{s.feasible}, s.uams_per_sector * bw / c.capacity.bandwidth_hz,
                   s.feasible ? linear_to_db(s.threshold_linear) : 0.0});
        }
    CommandResult out;
    out.tables.push_back({"fig4_10_supportable.csv", std::move(t)});
    return out;
}

CommandResult fig4_13(const ScenarioConfig& cfg, std::size_t seeds)
{
    CsvTable per_seed({"config", "seed", "overall", "vtol", "cruise", "mean_per_uam", "master_epochs"});
    CsvTable pooled({"config", "overall", "vtol", "cruise", "mean_per_uam", "master_epochs"});
    for (const auto& step : proposal_stack()) {
        ScenarioConfig c = cfg;
        c.toggles = step.toggles;
        const auto r = run_mobility_seeds(c, seeds);
        for (std::size_t i = 0; i < r.per_seed.size(); ++i) {
            const auto& s = r.per_seed[i];
            per_seed.add({step.name, static_cast<std::int64_t>(c.study.seed + i), s.overall, s.vtol, s.cruise,
                          s.mean_per_uam, static_cast<std::int64_t>(s.master_epochs)});
        }
        const auto& s = r.summary;
        pooled.add({step.name, s.overall, s.vtol, s.cruise, s.mean_per_uam,
                    static_cast<std::int64_t>(s.master_epochs)});
    }
    CommandResult out;
    out.tables.push_back({"fig4_13_per_seed.csv", std::move(per_seed)});
    out.tables.push_back({"fig4_13_reliability.csv", std::move(pooled)});
    return out;
}

struct Figure {
    const char* id;
    Runner run;
};

const std::vector<Figure>& runners()
{
    static const std::vector<Figure> table{
        {"fig3_3", fig3_3}, {"fig3_5b", fig3_5b}, {"fig3_6", fig3_6},   {"fig3_7", fig3_7},
        {"fig3_8", fig3_8}, {"fig4_2", fig4_2},   {"fig4_5", fig4_5},   {"fig4_7", fig4_7},
        {"fig4_10", fig4_10}, {"fig4_13", fig4_13},
    };
    return table;
}

} // namespace

const std::vector<StackStep>& proposal_stack()
{
    static const std::vector<StackStep> steps{
        {"baseline", {}},
        {"tilt", {.tilt_opt = true}},
        {"tilt_multilayer_reuse", {.tilt_opt = true, .reuse = true, .multi_layer = true}},
        {"full", {.tilt_opt = true, .reuse = true, .multi_layer = true, .master = true}},
    };
    return steps;
}

const std::vector<std::string>& figure_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& f : runners())
            v.emplace_back(f.id);
        return v;
    }();
    return ids;
}

CommandResult reproduce(const std::string& id, const ScenarioConfig& cfg, std::size_t seeds)
{
    validate(cfg);
    for (const auto& f : runners())
        if (id == f.id)
            return f.run(cfg, seeds);
    throw std::invalid_argument("reproduce: unknown figure id " + id);
}

} // namespace uam::cli
