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
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "uam/geometry.hpp"
#include "uam/rng.hpp"

namespace uam {

struct MobilityParams {
    double v_vertical_kmh = 50.0;
    double v_horizontal_kmh = 160.0;
    double cruise_min = 100.0;
    double cruise_max = 300.0;
    std::size_t max_concurrent = 50;
    double dt_s = 0.1;
    /// Simulated span of a mobility run.
    double duration_s = 300.0;

    [[nodiscard]] std::vector<std::string> violations(const SpatialParams& spatial) const;
};

enum class FlightPhase { VerticalTakeoff, HorizontalCruise, VerticalLanding, Completed };

const char* phase_name(FlightPhase p);
/// Takeoff and landing are the vertical (VTOL) phases.
inline bool is_vertical(FlightPhase p) { return p == FlightPhase::VerticalTakeoff || p == FlightPhase::VerticalLanding; }

/// Point-to-point flight: climb at the takeoff pad, straight cruise, descend at the landing pad.
struct Mission {
    Vec3 takeoff;  // z = 0
    Vec3 landing;  // z = 0
    double cruise_height = 0.0;
};

/// Pads uniform over the window outside every building footprint; cruise height
/// uniform in [cruise_min, cruise_max]. Throws after max_tries rejections per pad.
Mission sample_mission(const MobilityParams& params, const SpatialParams& spatial, std::span<const Building> buildings,
                       Rng& rng, int max_tries = 10000);

struct Pose {
    Vec3 position;
    FlightPhase phase = FlightPhase::VerticalTakeoff;
};

double climb_time(const Mission& m, const MobilityParams& p);
double cruise_time(const Mission& m, const MobilityParams& p);
double mission_duration(const Mission& m, const MobilityParams& p);

/// Piecewise-linear pose at time t >= 0 since takeoff.
Pose position_at(const Mission& m, double t, const MobilityParams& p);

/// FIFO admission: moves waiting ids into `active` until it holds `cap` entries.
/// Returns the ids admitted by this call, in admission order.
std::vector<std::size_t> admission_control(std::deque<std::size_t>& waiting, std::vector<std::size_t>& active,
                                           std::size_t cap);

} // namespace uam
