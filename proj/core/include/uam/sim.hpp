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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uam/antenna.hpp"
#include "uam/blockage.hpp"
#include "uam/link.hpp"
#include "uam/mobility.hpp"
#include "uam/scenario.hpp"

namespace uam {

/// One realization with everything link evaluation needs. Immutable once built.
struct DropScene {
    UrbanEnvironment env;
    BeamPlan plan;
    BlockageIndex index;
    ChannelParams channel;
    AntennaParams antenna;

    [[nodiscard]] RadioScene radio() const { return {&env.mbs_sites, &plan, &index, channel, antenna}; }
};

DropScene build_scene(const ScenarioConfig& cfg, const BeamPlanSpec& beams, std::uint64_t seed);

/// Downward layer at or below the VTOL ceiling when the plan has one.
Layer layer_for_height(const BeamPlanSpec& beams, double h_U, double vtol_ceiling_m);
Layer layer_for_phase(const BeamPlanSpec& beams, FlightPhase phase);

struct ProbeResult {
    Vec3 position;
    bool served = false;
    double sinr = 0.0;
    std::size_t serving_blockers = 0;
    /// Mean blocker count over the non-serving sites.
    double interfering_blockers = 0.0;
};

ProbeResult evaluate_probe(const DropScene& scene, const Vec3& uam, Layer layer, Rng& fading_rng);

struct DropOptions {
    std::size_t drops = 1000;
    /// Fixed reference height; uniform over [h_U_min, h_U_max] when empty.
    std::optional<double> height;
};

/// One reference UAM per independently sampled drop, placed uniformly in the
/// study region outside buildings. Results are in drop order for any worker count.
std::vector<ProbeResult> run_drops(const ScenarioConfig& cfg, const DropOptions& options);

/// Fraction of results with SINR > T (linear). Unserved results count as failures.
double coverage_fraction(std::span<const ProbeResult> results, double T);

struct QuintileRow {
    int range = 0;
    std::size_t count = 0;
    double mean_sinr_db = 0.0;
    double mean_height = 0.0;
    double mean_serving_blockers = 0.0;
    double mean_interfering_blockers = 0.0;
};

struct ReliabilityRecord {
    std::size_t uam_id = 0;
    std::size_t vtol_success = 0;
    std::size_t vtol_total = 0;
    std::size_t cruise_success = 0;
    std::size_t cruise_total = 0;

    [[nodiscard]] std::size_t total() const { return vtol_total + cruise_total; }
    [[nodiscard]] double reliability() const
    {
        return total() == 0 ? 1.0 : static_cast<double>(vtol_success + cruise_success) / static_cast<double>(total());
    }
};

struct ReliabilitySummary {
    std::size_t samples = 0;
    /// Success fraction over every UAM-step.
    double overall = 0.0;
    double vtol = 0.0;
    double cruise = 0.0;
    /// Mean of per-UAM reliabilities.
    double mean_per_uam = 0.0;
    std::size_t master_epochs = 0;
};

ReliabilitySummary summarize(std::span<const ReliabilityRecord> records, std::size_t master_epochs);

struct MetricsReport {
    /// Sorted ascending; unserved probes carry -inf.
    std::vector<double> sinr_db;
    std::vector<std::pair<double, double>> coverage_vs_threshold;
    std::vector<std::pair<double, double>> coverage_vs_height;
    std::vector<QuintileRow> quintiles;
    double mean_serving_blockers = 0.0;
    double mean_interfering_blockers = 0.0;
    std::vector<ReliabilityRecord> reliability;
    ReliabilitySummary summary;
};

/// Probe UAMs on a lattice (study.probe_spacing_m) over the study region at every
/// study.probe_heights entry, in one environment drawn from study.seed.
MetricsReport run_geometry_study(const ScenarioConfig& cfg);
/// Coverage by height, quintiles and blocker counts from any probe set.
MetricsReport probe_report(std::span<const ProbeResult> probes, double threshold_db);

struct EpochLogRow {
    std::size_t step = 0;
    std::optional<std::size_t> master;
    std::vector<std::size_t> failures;
    std::vector<double> deficits;
    std::vector<double> post_rates;
};

struct TraceRow {
    double t = 0.0;
    std::size_t uam_id = 0;
    Vec3 position;
    FlightPhase phase = FlightPhase::VerticalTakeoff;
};

struct MobilityOptions {
    bool keep_epochs = false;
    bool keep_trace = false;
};

struct MobilityResult {
    std::vector<ReliabilityRecord> records;
    ReliabilitySummary summary;
    std::vector<EpochLogRow> epochs;
    std::vector<TraceRow> trace;
    /// Filled by run_mobility_seeds, in seed order.
    std::vector<ReliabilitySummary> per_seed;
};

/// Time-stepped flights in one environment drawn from `seed`. The active set is
/// held at max_concurrent by replacing completed missions; the initial batch starts
/// at uniformly random points of their flights.
MobilityResult run_mobility_study(const ScenarioConfig& cfg, std::uint64_t seed, const MobilityOptions& options = {});

/// run_mobility_study over seeds seed, seed+1, ..., pooled in seed order.
MobilityResult run_mobility_seeds(const ScenarioConfig& cfg, std::size_t n_seeds);

struct SweepRow {
    double value = 0.0;
    double coverage = 0.0;
    double mean_sinr_db = 0.0;
    double p5_sinr_db = 0.0;
    double served_fraction = 0.0;
};

/// Parameters accepted by sweep().
const std::vector<std::string>& sweep_parameters();

/// Drop-study coverage at study.threshold_db for each grid value, all with the same seed.
std::vector<SweepRow> sweep(const ScenarioConfig& cfg, const std::string& parameter, std::span<const double> grid);

} // namespace uam
