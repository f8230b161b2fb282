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

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <limits>
#include <map>

#include "uam/sim.hpp"
#include "uam/units.hpp"

namespace {

using uam::ScenarioConfig;

ScenarioConfig small_config()
{
    ScenarioConfig cfg;
    cfg.spatial.window_half_width = 1000.0;
    cfg.grid.rows = 3;
    cfg.grid.cols = 3;
    cfg.study.region_half_width = 300.0;
    return cfg;
}

TEST(Sim, DropsAreIdenticalForAnyWorkerCount)
{
    auto cfg = small_config();
    cfg.study.workers = 1;
    const auto a = uam::run_drops(cfg, {60, std::nullopt});
    cfg.study.workers = 4;
    const auto b = uam::run_drops(cfg, {60, std::nullopt});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].position, b[i].position);
        EXPECT_EQ(a[i].served, b[i].served);
        EXPECT_EQ(a[i].sinr, b[i].sinr);
    }
}

TEST(Sim, FixedHeightIsHonoured)
{
    const auto cfg = small_config();
    for (const auto& p : uam::run_drops(cfg, {20, 150.0}))
        EXPECT_DOUBLE_EQ(p.position.z, 150.0);
}

TEST(Sim, CoverageFractionCountsUnservedAsFailures)
{
    std::vector<uam::ProbeResult> r(4);
    r[0].served = true;
    r[0].sinr = 10.0;
    r[1].served = true;
    r[1].sinr = 0.5;
    r[2].served = false;
    r[3].served = true;
    r[3].sinr = 2.0;
    EXPECT_DOUBLE_EQ(uam::coverage_fraction(r, 1.0), 0.5);
    EXPECT_DOUBLE_EQ(uam::coverage_fraction(r, 0.1), 0.75);
}

TEST(Sim, LayerSelection)
{
    uam::BeamPlanSpec b;
    EXPECT_EQ(uam::layer_for_height(b, 10.0, 100.0), uam::Layer::Single);
    b.multi_layer = true;
    EXPECT_EQ(uam::layer_for_height(b, 10.0, 100.0), uam::Layer::Down);
    EXPECT_EQ(uam::layer_for_height(b, 150.0, 100.0), uam::Layer::Up);
    EXPECT_EQ(uam::layer_for_phase(b, uam::FlightPhase::VerticalTakeoff), uam::Layer::Down);
    EXPECT_EQ(uam::layer_for_phase(b, uam::FlightPhase::HorizontalCruise), uam::Layer::Up);
}

TEST(Sim, ProbeReportQuintilesAreOrdered)
{
    std::vector<uam::ProbeResult> probes;
    for (int i = 0; i < 100; ++i) {
        uam::ProbeResult p;
        p.served = true;
        p.sinr = uam::db_to_linear(-20.0 + 0.5 * i);
        p.position = {0, 0, 300.0 - 2.5 * i};
        probes.push_back(p);
    }
    const auto rep = uam::probe_report(probes, 0.0);
    ASSERT_EQ(rep.quintiles.size(), 5u);
    for (std::size_t q = 0; q < 5; ++q) {
        EXPECT_EQ(rep.quintiles[q].range, static_cast<int>(q) + 1);
        EXPECT_EQ(rep.quintiles[q].count, 20u);
        if (q > 0) {
            EXPECT_GT(rep.quintiles[q].mean_sinr_db, rep.quintiles[q - 1].mean_sinr_db);
            EXPECT_LT(rep.quintiles[q].mean_height, rep.quintiles[q - 1].mean_height);
        }
    }
    EXPECT_TRUE(std::is_sorted(rep.sinr_db.begin(), rep.sinr_db.end()));
}

TEST(Sim, SummaryPoolsSteps)
{
    std::vector<uam::ReliabilityRecord> recs(2);
    recs[0] = {0, 9, 10, 0, 0};
    recs[1] = {1, 0, 0, 5, 10};
    const auto s = uam::summarize(recs, 3);
    EXPECT_EQ(s.samples, 20u);
    EXPECT_DOUBLE_EQ(s.overall, 14.0 / 20.0);
    EXPECT_DOUBLE_EQ(s.vtol, 0.9);
    EXPECT_DOUBLE_EQ(s.cruise, 0.5);
    EXPECT_DOUBLE_EQ(s.mean_per_uam, 0.7);
    EXPECT_EQ(s.master_epochs, 3u);
}

ScenarioConfig mobility_config()
{
    auto cfg = small_config();
    cfg.mobility.max_concurrent = 6;
    cfg.mobility.duration_s = 20.0;
    cfg.mobility.dt_s = 0.5;
    cfg.study.region_half_width = 600.0;
    return cfg;
}

TEST(Sim, MobilityIsDeterministicAcrossWorkers)
{
    auto cfg = mobility_config();
    cfg.study.workers = 1;
    const auto a = uam::run_mobility_study(cfg, 5, {.keep_epochs = true, .keep_trace = true});
    cfg.study.workers = 3;
    const auto b = uam::run_mobility_study(cfg, 5, {.keep_epochs = true, .keep_trace = true});
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i)
        ASSERT_EQ(a.trace[i].position, b.trace[i].position);
    EXPECT_EQ(a.summary.overall, b.summary.overall);
    EXPECT_EQ(a.summary.samples, 6u * 40u);
}

TEST(Sim, SeedPoolingMatchesIndividualRuns)
{
    auto cfg = mobility_config();
    cfg.study.seed = 11;
    const auto pooled = uam::run_mobility_seeds(cfg, 3);
    ASSERT_EQ(pooled.per_seed.size(), 3u);
    std::size_t samples = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto single = uam::run_mobility_study(cfg, 11 + i);
        EXPECT_EQ(pooled.per_seed[i].overall, single.summary.overall);
        samples += single.summary.samples;
    }
    EXPECT_EQ(pooled.summary.samples, samples);
}

TEST(Sim, ActiveSetNeverExceedsCap)
{
    const auto cfg = mobility_config();
    const auto r = uam::run_mobility_study(cfg, 2, {.keep_trace = true});
    std::map<double, std::size_t> per_step;
    for (const auto& t : r.trace)
        ++per_step[t.t];
    for (const auto& [t, n] : per_step)
        EXPECT_LE(n, cfg.mobility.max_concurrent) << t;
}

TEST(Sim, MasterNeverHurtsReliability)
{
    auto cfg = mobility_config();
    cfg.toggles.reuse = true;
    const auto off = uam::run_mobility_study(cfg, 9);
    cfg.toggles.master = true;
    const auto on = uam::run_mobility_study(cfg, 9);
    EXPECT_GE(on.summary.overall, off.summary.overall);
}

TEST(Sim, SweepRejectsUnknownParameter)
{
    const auto cfg = small_config();
    const std::vector<double> grid{1.0};
    EXPECT_THROW(uam::sweep(cfg, "not_a_parameter", grid), std::invalid_argument);
}

} // namespace
