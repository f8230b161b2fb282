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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "uam/geometry.hpp"
#include "uam/units.hpp"

namespace {

using uam::Building;
using uam::SpatialParams;
using uam::Vec3;

TEST(Geometry, MbsCountIsPoissonWithWindowMean)
{
    SpatialParams p;
    p.lambda_M = 5.0;
    p.lambda_U = 0.0;
    p.lambda_B = 0.0;
    p.window_half_width = 500.0;  // 1 km^2
    const int seeds = 10000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < seeds; ++s) {
        const auto n = static_cast<double>(uam::sample_environment(p, s).mbs_sites.size());
        sum += n;
        sum_sq += n * n;
    }
    const double mean = sum / seeds;
    const double var = sum_sq / seeds - mean * mean;
    EXPECT_NEAR(mean, 5.0, 0.15);
    // Poisson: variance equals the mean. Sample variance of 10^4 draws has sd ~0.08.
    EXPECT_NEAR(var, 5.0, 0.35);
}

TEST(Geometry, BuildingCountAndHeightMoments)
{
    SpatialParams p;
    p.lambda_B = 300.0;
    p.window_half_width = 2000.0;
    const auto b = uam::sample_buildings(p, 7);
    const double expected = 300.0 * 16.0;
    EXPECT_NEAR(static_cast<double>(b.size()), expected, 4.0 * std::sqrt(expected));
    double h = 0.0;
    for (const auto& x : b) {
        h += x.height();
        EXPECT_LE(std::abs(x.center.x), p.window_half_width);
        EXPECT_LE(std::abs(x.center.y), p.window_half_width);
    }
    h /= static_cast<double>(b.size());
    const double rayleigh_mean = p.sigma_hB * std::sqrt(std::numbers::pi / 2.0);
    // sd of a Rayleigh draw is sigma sqrt(2 - pi/2) ~ 13.1 m; 4 standard errors.
    EXPECT_NEAR(h, rayleigh_mean, 4.0 * 13.1 / std::sqrt(static_cast<double>(b.size())));
    EXPECT_NEAR(rayleigh_mean, 25.07, 0.01);
}

TEST(Geometry, EmptyBuildingDensityGivesNoBuildings)
{
    SpatialParams p;
    p.lambda_B = 0.0;
    EXPECT_TRUE(uam::sample_environment(p, 3).buildings.empty());
}

TEST(Geometry, SamplingIsDeterministicPerSeed)
{
    SpatialParams p;
    p.window_half_width = 600.0;
    EXPECT_EQ(uam::sample_environment(p, 42), uam::sample_environment(p, 42));
    EXPECT_NE(uam::sample_environment(p, 42).buildings, uam::sample_environment(p, 43).buildings);
}

TEST(Geometry, UamNodesAreOutsideBuildings)
{
    SpatialParams p;
    p.window_half_width = 700.0;
    const auto env = uam::sample_environment(p, 11);
    ASSERT_FALSE(env.uam_nodes.empty());
    for (const auto& u : env.uam_nodes) {
        EXPECT_GE(u.z, p.h_U_min);
        EXPECT_LE(u.z, p.h_U_max);
        for (const auto& b : env.buildings)
            ASSERT_FALSE(uam::inside_volume(u, b));
    }
}

TEST(Geometry, InvalidWindowIsRejected)
{
    SpatialParams p;
    p.window_half_width = 0.0;
    EXPECT_FALSE(p.violations().empty());
    EXPECT_THROW(uam::sample_environment(p, 1), std::invalid_argument);
}

TEST(Geometry, SingleGridSiteSitsAtCenter)
{
    const auto sites = uam::hex_grid_sites({.imd = 750.0, .rows = 1, .cols = 1}, 25.0);
    ASSERT_EQ(sites.size(), 1u);
    EXPECT_EQ(sites[0], (Vec3{0.0, 0.0, 25.0}));
}

TEST(Geometry, GridNearestNeighbourDistanceIsImd)
{
    for (double imd : {750.0, 1000.0}) {
        const auto sites = uam::hex_grid_sites({.imd = imd, .rows = 3, .cols = 3}, 25.0);
        ASSERT_EQ(sites.size(), 9u);
        for (std::size_t i = 0; i < sites.size(); ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < sites.size(); ++j)
                if (i != j)
                    nearest = std::min(nearest, uam::link_2d_distance(sites[i], sites[j]));
            EXPECT_NEAR(nearest, imd, 1e-9);
        }
    }
}

TEST(Geometry, HexDensityMatchesCellArea)
{
    // A hexagonal cell with inter-site distance d has area sqrt(3)/2 d^2.
    const double d = 750.0;
    EXPECT_NEAR(uam::hex_grid_density_per_km2(d), 1e6 / (std::sqrt(3.0) / 2.0 * d * d), 1e-9);
}

TEST(Geometry, LinkAngles)
{
    const Vec3 a{0, 0, 25};
    EXPECT_DOUBLE_EQ(uam::link_2d_distance(a, {100, 0, 25}), 100.0);
    EXPECT_DOUBLE_EQ(uam::link_azimuth(a, {100, 0, 25}), 0.0);
    EXPECT_DOUBLE_EQ(uam::link_elevation(a, {100, 0, 25}), 0.0);
    EXPECT_NEAR(uam::rad_to_deg(uam::link_elevation(a, {100, 0, 125})), -45.0, 1e-12);
    EXPECT_NEAR(uam::link_azimuth(a, {0, 100, 25}), std::numbers::pi / 2.0, 1e-15);
    EXPECT_NEAR(uam::link_3d_distance(a, {30, 40, 25}), 50.0, 1e-12);
}

TEST(Geometry, ClearingMatchesBruteForce)
{
    SpatialParams p;
    p.lambda_B = 600.0;
    p.window_half_width = 800.0;
    auto buildings = uam::sample_buildings(p, 5);
    std::vector<Vec3> points;
    uam::Rng rng(9);
    for (int i = 0; i < 300; ++i)
        points.push_back({rng.uniform(-800, 800), rng.uniform(-800, 800), rng.uniform(0, 60)});

    std::vector<Building> expected;
    for (const auto& b : buildings) {
        const bool hit = std::any_of(points.begin(), points.end(), [&](const Vec3& q) {
            return std::abs(q.x - b.center.x) <= 0.5 * b.W && std::abs(q.y - b.center.y) <= 0.5 * b.D &&
                   q.z <= b.center.z;
        });
        if (!hit)
            expected.push_back(b);
    }
    uam::clear_buildings_around(buildings, points);
    EXPECT_EQ(buildings, expected);
    EXPECT_LT(buildings.size(), uam::sample_buildings(p, 5).size());
}

TEST(Geometry, ReplayRoundTrip)
{
    SpatialParams p;
    p.window_half_width = 400.0;
    const auto env = uam::sample_environment(p, 21);
    std::stringstream ss;
    uam::write_environment(ss, env);
    const auto back = uam::read_environment(ss);
    EXPECT_EQ(back.mbs_sites, env.mbs_sites);
    EXPECT_EQ(back.uam_nodes, env.uam_nodes);
    EXPECT_EQ(back.buildings, env.buildings);
}

TEST(Geometry, ReplayRejectsUnknownRecord)
{
    std::stringstream ss("tower 1 2 3\n");
    EXPECT_THROW(uam::read_environment(ss), std::runtime_error);
}

TEST(Geometry, FreeSpacePositionAcceptedWithoutBuildings)
{
    uam::Rng rng(1);
    const auto pos = uam::sample_uam_position(rng, {}, 100.0, 10.0, 20.0, 1);
    EXPECT_GE(pos.z, 10.0);
    EXPECT_LE(pos.z, 20.0);
}

} // namespace
