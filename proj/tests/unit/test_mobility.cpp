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
#include <deque>

#include "uam/mobility.hpp"
#include "uam/units.hpp"

namespace {

using uam::FlightPhase;
using uam::Mission;
using uam::MobilityParams;

TEST(Mobility, CruiseHeightIsUniform)
{
    const MobilityParams p;
    const uam::SpatialParams s;
    uam::Rng rng(10);
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const Mission m = uam::sample_mission(p, s, {}, rng);
        EXPECT_GE(m.cruise_height, p.cruise_min);
        EXPECT_LE(m.cruise_height, p.cruise_max);
        sum += m.cruise_height;
    }
    EXPECT_NEAR(sum / n, 200.0, 3.0);
}

TEST(Mobility, PadsAvoidFootprints)
{
    const MobilityParams p;
    uam::SpatialParams s;
    s.window_half_width = 500.0;
    const auto buildings = uam::sample_buildings(s, 4);
    uam::Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const Mission m = uam::sample_mission(p, s, buildings, rng);
        for (const auto& b : buildings) {
            ASSERT_FALSE(uam::inside_footprint(m.takeoff.x, m.takeoff.y, b));
            ASSERT_FALSE(uam::inside_footprint(m.landing.x, m.landing.y, b));
        }
    }
}

TEST(Mobility, TakeoffEndsAfterClimb)
{
    const MobilityParams p;
    const Mission m{{0, 0, 0}, {1000, 0, 0}, 150.0};
    EXPECT_NEAR(uam::climb_time(m, p), 10.8, 1e-12);
    const auto start = uam::position_at(m, 0.0, p);
    EXPECT_EQ(start.position, (uam::Vec3{0, 0, 0}));
    EXPECT_EQ(start.phase, FlightPhase::VerticalTakeoff);
    EXPECT_EQ(uam::position_at(m, 10.79, p).phase, FlightPhase::VerticalTakeoff);
    EXPECT_EQ(uam::position_at(m, 10.81, p).phase, FlightPhase::HorizontalCruise);
}

TEST(Mobility, PathLengthAndTimeAdditivity)
{
    const MobilityParams p;
    const Mission m{{-300, 100, 0}, {500, -500, 0}, 220.0};
    const double ground = std::hypot(800.0, 600.0);
    const double path = 2.0 * m.cruise_height + ground;
    const double expected =
        2.0 * m.cruise_height / uam::kmh_to_ms(p.v_vertical_kmh) + ground / uam::kmh_to_ms(p.v_horizontal_kmh);
    EXPECT_NEAR(uam::mission_duration(m, p), expected, 1e-9);
    // Integrate the distance travelled along the piecewise-linear track.
    const double dt = 0.01;
    double travelled = 0.0;
    auto prev = uam::position_at(m, 0.0, p).position;
    for (double t = dt; t <= expected + 1.0; t += dt) {
        const auto cur = uam::position_at(m, t, p).position;
        travelled += std::sqrt(std::pow(cur.x - prev.x, 2) + std::pow(cur.y - prev.y, 2) + std::pow(cur.z - prev.z, 2));
        prev = cur;
    }
    EXPECT_NEAR(travelled, path, 0.5);
    EXPECT_EQ(uam::position_at(m, expected + 0.5, p).phase, FlightPhase::Completed);
    EXPECT_TRUE(uam::is_vertical(FlightPhase::VerticalLanding));
    EXPECT_FALSE(uam::is_vertical(FlightPhase::HorizontalCruise));
}

TEST(Mobility, DegenerateMissionGoesUpAndDown)
{
    const MobilityParams p;
    const Mission m{{5, 5, 0}, {5, 5, 0}, 100.0};
    EXPECT_DOUBLE_EQ(uam::cruise_time(m, p), 0.0);
    const double t_up = uam::climb_time(m, p);
    EXPECT_EQ(uam::position_at(m, t_up + 1.0, p).phase, FlightPhase::VerticalLanding);
    EXPECT_NEAR(uam::position_at(m, t_up + 1.0, p).position.z, 100.0 - uam::kmh_to_ms(p.v_vertical_kmh), 1e-9);
}

TEST(Mobility, NegativeTimeRejected)
{
    EXPECT_THROW(uam::position_at(Mission{}, -1.0, MobilityParams{}), std::invalid_argument);
}

TEST(Mobility, AdmissionQueuesBeyondCap)
{
    std::deque<std::size_t> waiting;
    for (std::size_t i = 0; i < 60; ++i)
        waiting.push_back(i);
    std::vector<std::size_t> active;
    const auto admitted = uam::admission_control(waiting, active, 50);
    EXPECT_EQ(admitted.size(), 50u);
    EXPECT_EQ(waiting.size(), 10u);
    EXPECT_EQ(admitted.front(), 0u);
    EXPECT_EQ(admitted.back(), 49u);
}

TEST(Mobility, CapOneIsSerial)
{
    std::deque<std::size_t> waiting{0, 1, 2};
    std::vector<std::size_t> active;
    std::vector<std::size_t> order;
    while (!waiting.empty() || !active.empty()) {
        for (auto id : uam::admission_control(waiting, active, 1))
            order.push_back(id);
        ASSERT_LE(active.size(), 1u);
        active.clear();  // the active mission completes
    }
    EXPECT_EQ(order, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Mobility, ParamsValidation)
{
    MobilityParams p;
    const uam::SpatialParams s;
    EXPECT_TRUE(p.violations(s).empty());
    p.cruise_max = 400.0;
    p.dt_s = 0.0;
    EXPECT_EQ(p.violations(s).size(), 2u);
}

} // namespace
