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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uam/analytics.hpp"
#include "uam/antenna.hpp"
#include "uam/channel.hpp"
#include "uam/geometry.hpp"
#include "uam/master.hpp"
#include "uam/mobility.hpp"
#include "uam/quadrature.hpp"

namespace uam {

enum class LayoutKind { Grid, Ppp };

/// The three proposals, independently switchable.
struct Toggles {
    bool tilt_opt = false;
    bool reuse = false;
    bool multi_layer = false;
    bool master = false;
};

struct TiltSettings {
    /// Conventional downtilt used when tilt optimization is off.
    double baseline_deg = 12.0;
    /// Height targeted by the optimized (upward layer) tilt.
    double cruise_target_m = 300.0;
    /// Height targeted by the downward layer.
    double vtol_target_m = 25.0;
    TiltObjective objective = TiltObjective::Linear;
    double step_deg = 0.5;
};

struct StudySettings {
    std::uint64_t seed = 1;
    std::size_t drops = 2000;
    unsigned workers = 0;
    /// Reference UAMs of drop studies are placed in [-half, half]^2.
    double region_half_width = 500.0;
    /// UAMs at or below this height use the downward layer when there is one.
    double vtol_ceiling_m = 100.0;
    double threshold_db = 0.0;
    double probe_spacing_m = 50.0;
    std::vector<double> probe_heights{1.5, 25.0, 50.0, 100.0, 150.0, 200.0, 250.0, 300.0};
};

struct ScenarioConfig {
    SpatialParams spatial;
    LayoutKind layout = LayoutKind::Grid;
    GridLayout grid;
    ChannelParams channel;
    AntennaParams antenna;
    BeamPlanSpec beams{.omni = false, .sectors = 3, .n_beam = 3, .delta = 3};
    TiltSettings tilt;
    CapacityParams capacity;
    MobilityParams mobility;
    MasterLinkParams master;
    QuadratureSpec quad;
    Toggles toggles;
    StudySettings study;

    /// Every violated invariant across all sections.
    [[nodiscard]] std::vector<std::string> violations() const;
};

/// Thrown with every violation joined into what().
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);
    [[nodiscard]] const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Parses JSON text on top of the defaults; unknown keys are errors.
ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::string& path);
/// Pretty JSON holding every field; parse_config(dump_config(c)) == c field-wise.
std::string dump_config(const ScenarioConfig& cfg);
/// Throws ConfigError when violations() is non-empty.
void validate(const ScenarioConfig& cfg);

/// Tilt search over the layout's inter-site spacing and the configured MBS height.
TiltSearch tilt_search(const ScenarioConfig& cfg);
/// Beam plan actually deployed once the toggles are applied: reuse off forces
/// delta = n_beam = 1, tilt optimization replaces the baseline tilt, multi_layer
/// adds the downward layer.
BeamPlanSpec effective_beams(const ScenarioConfig& cfg);

/// Analytic view of the scenario with the effective beam plan.
AnalyticModel analytic_model(const ScenarioConfig& cfg);

/// Applies "name=value" overrides using dotted JSON paths (e.g. "beams.n_beam=4").
void apply_override(ScenarioConfig& cfg, std::string_view assignment);

} // namespace uam
