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

#include "uam/mobility.hpp"

#include <cmath>
#include <stdexcept>

#include "uam/units.hpp"

namespace uam {

std::vector<std::string> MobilityParams::violations(const SpatialParams& spatial) const
{
    std::vector<std::string> out;
    if (!(v_vertical_kmh > 0.0))
        out.emplace_back("mobility.v_vertical_kmh must be > 0");
    if (!(v_horizontal_kmh > 0.0))
        out.emplace_back("mobility.v_horizontal_kmh must be > 0");
    if (!(cruise_min <= cruise_max))
        out.emplace_back("mobility.cruise_min must be <= cruise_max");
    if (!(cruise_min >= spatial.h_U_min && cruise_max <= spatial.h_U_max))
        out.emplace_back("mobility cruise heights must lie within [h_U_min, h_U_max]");
    if (max_concurrent < 1)
        out.emplace_back("mobility.max_concurrent must be >= 1");
    if (!(dt_s > 0.0))
        out.emplace_back("mobility.dt_s must be > 0");
    if (!(duration_s > 0.0))
        out.emplace_back("mobility.duration_s must be > 0");
    return out;
}

const char* phase_name(FlightPhase p)
{
    switch (p) {
    case FlightPhase::VerticalTakeoff:
        return "takeoff";
    case FlightPhase::HorizontalCruise:
        return "cruise";
    case FlightPhase::VerticalLanding:
        return "landing";
    case FlightPhase::Completed:
        return "completed";
    }
    return "unknown";
}

namespace {

Vec3 sample_pad(const SpatialParams& spatial, std::span<const Building> buildings, Rng& rng, int max_tries)
{
    const double half = spatial.window_half_width;
    for (int i = 0; i < max_tries; ++i) {
        const double x = rng.uniform(-half, half);
        const double y = rng.uniform(-half, half);
        bool clear = true;
        for (const auto& b : buildings) {
            if (inside_footprint(x, y, b)) {
                clear = false;
                break;
            }
        }
        if (clear)
            return {x, y, 0.0};
    }
    throw std::runtime_error("sample_mission: no free pad location found");
}

} // namespace

Mission sample_mission(const MobilityParams& params, const SpatialParams& spatial, std::span<const Building> buildings,
                       Rng& rng, int max_tries)
{
    Mission m;
    m.takeoff = sample_pad(spatial, buildings, rng, max_tries);
    m.landing = sample_pad(spatial, buildings, rng, max_tries);
    m.cruise_height = params.cruise_min == params.cruise_max ? params.cruise_min
                                                             : rng.uniform(params.cruise_min, params.cruise_max);
    return m;
}

double climb_time(const Mission& m, const MobilityParams& p) { return m.cruise_height / kmh_to_ms(p.v_vertical_kmh); }

double cruise_time(const Mission& m, const MobilityParams& p)
{
    return link_2d_distance(m.takeoff, m.landing) / kmh_to_ms(p.v_horizontal_kmh);
}

double mission_duration(const Mission& m, const MobilityParams& p) { return 2.0 * climb_time(m, p) + cruise_time(m, p); }

Pose position_at(const Mission& m, double t, const MobilityParams& p)
{
    if (t < 0.0)
        throw std::invalid_argument("position_at: t must be >= 0");
    const double vv = kmh_to_ms(p.v_vertical_kmh);
    const double t_up = climb_time(m, p);
    const double t_cruise = cruise_time(m, p);
    if (t < t_up)
        return {{m.takeoff.x, m.takeoff.y, vv * t}, FlightPhase::VerticalTakeoff};
    t -= t_up;
    if (t < t_cruise) {
        const double f = t / t_cruise;
        return {{m.takeoff.x + f * (m.landing.x - m.takeoff.x), m.takeoff.y + f * (m.landing.y - m.takeoff.y),
                 m.cruise_height},
                FlightPhase::HorizontalCruise};
    }
    t -= t_cruise;
    if (t < t_up)
        return {{m.landing.x, m.landing.y, m.cruise_height - vv * t}, FlightPhase::VerticalLanding};
    return {m.landing, FlightPhase::Completed};
}

std::vector<std::size_t> admission_control(std::deque<std::size_t>& waiting, std::vector<std::size_t>& active,
                                           std::size_t cap)
{
    std::vector<std::size_t> admitted;
    while (active.size() < cap && !waiting.empty()) {
        active.push_back(waiting.front());
        admitted.push_back(waiting.front());
        waiting.pop_front();
    }
    return admitted;
}

} // namespace uam
