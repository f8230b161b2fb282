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

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "uam/analytics.hpp"
#include "uam/blockage.hpp"
#include "uam/geometry.hpp"
#include "uam/master.hpp"
#include "uam/rng.hpp"
#include "uam/scenario.hpp"
#include "uam/sim.hpp"

namespace {

using namespace uam;

std::vector<std::pair<Vec3, Vec3>> random_links(const UrbanEnvironment& env, std::size_t n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::pair<Vec3, Vec3>> links;
    for (std::size_t i = 0; i < n; ++i)
        links.emplace_back(env.mbs_sites[rng.below(env.mbs_sites.size())],
                           sample_uam_position(rng, env.buildings, 1000.0, 1.5, 300.0));
    return links;
}

UrbanEnvironment city()
{
    SpatialParams s;
    s.lambda_U = 0.0;
    return grid_environment(GridLayout{}, s, 7);
}

void BM_CountBlockersLinear(benchmark::State& state)
{
    const auto env = city();
    const auto links = random_links(env, 1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [m, u] = links[i++ & 1023];
        benchmark::DoNotOptimize(count_blockers(m, u, env.buildings));
    }
}
BENCHMARK(BM_CountBlockersLinear);

void BM_CountBlockersIndexed(benchmark::State& state)
{
    const auto env = city();
    const BlockageIndex index(env.buildings);
    const auto links = random_links(env, 1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [m, u] = links[i++ & 1023];
        benchmark::DoNotOptimize(index.count(m, u));
    }
}
BENCHMARK(BM_CountBlockersIndexed);

void BM_OracleCount(benchmark::State& state)
{
    const auto env = city();
    const auto links = random_links(env, 1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [m, u] = links[i++ & 1023];
        benchmark::DoNotOptimize(oracle_count_blockers(m, u, env.buildings));
    }
}
BENCHMARK(BM_OracleCount);

void BM_InterferenceLaplace(benchmark::State& state)
{
    AnalyticModel model;
    model.beams.omni = true;
    model.channel.m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(interference_laplace(1e-9, 200.0, 150.0, model, model.channel.m - 1));
}
BENCHMARK(BM_InterferenceLaplace)->Arg(1)->Arg(2)->Arg(4);

void BM_CoverageProbability(benchmark::State& state)
{
    AnalyticModel model;
    model.beams.omni = true;
    model.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(coverage_probability(1.0, model));
}
BENCHMARK(BM_CoverageProbability)->Unit(benchmark::kMillisecond);

void BM_CoverageWithReuse(benchmark::State& state)
{
    ScenarioConfig cfg;
    cfg.toggles.reuse = true;
    cfg.study.workers = 1;
    const AnalyticModel model = analytic_model(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(coverage_with_reuse(1.0, model));
}
BENCHMARK(BM_CoverageWithReuse)->Unit(benchmark::kMillisecond);

void BM_Drop(benchmark::State& state)
{
    ScenarioConfig cfg;
    cfg.toggles.reuse = true;
    cfg.study.workers = 1;
    for (auto _ : state) {
        cfg.study.seed++;
        benchmark::DoNotOptimize(run_drops(cfg, {.drops = 1, .height = std::nullopt}));
    }
}
BENCHMARK(BM_Drop)->Unit(benchmark::kMillisecond);

void BM_SelectMaster(benchmark::State& state)
{
    Rng rng(3);
    RateReport r{std::vector<double>(10), 1.0};
    for (auto& x : r.rates)
        x = rng.uniform(0.0, 4.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(select_master(r));
}
BENCHMARK(BM_SelectMaster);

} // namespace
BENCHMARK_MAIN();
