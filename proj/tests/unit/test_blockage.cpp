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
#include <vector>

#include "uam/blockage.hpp"

namespace {

using uam::Building;
using uam::Vec3;

Building box(double cx, double cy, double h, double w = 40.0, double d = 40.0)
{
    return Building{{cx, cy, h}, w, d};
}

// Independent 2D check: does the segment (x0,y0)-(x1,y1) touch the closed rectangle?
bool segment_touches_rect(double x0, double y0, double x1, double y1, const Building& b)
{
    double t0 = 0.0;
    double t1 = 1.0;
    const double d[2] = {x1 - x0, y1 - y0};
    const double p[2] = {x0, y0};
    const double lo[2] = {b.x_min(), b.y_min()};
    const double hi[2] = {b.x_max(), b.y_max()};
    for (int k = 0; k < 2; ++k) {
        if (d[k] == 0.0) {
            if (p[k] < lo[k] || p[k] > hi[k])
                return false;
            continue;
        }
        double a = (lo[k] - p[k]) / d[k];
        double c = (hi[k] - p[k]) / d[k];
        if (a > c)
            std::swap(a, c);
        t0 = std::max(t0, a);
        t1 = std::min(t1, c);
        if (t0 > t1)
            return false;
    }
    return true;
}

TEST(Blockage, HorizontalRayBlockedIffRoofAtOrAboveAntenna)
{
    const Vec3 mbs{0, 0, 25};
    const Vec3 uam{100, 0, 25};
    EXPECT_TRUE(uam::vertical_blocks(mbs, uam, 50.0, 25.0));
    EXPECT_TRUE(uam::vertical_blocks(mbs, uam, 50.0, 30.0));
    EXPECT_FALSE(uam::vertical_blocks(mbs, uam, 50.0, 24.9));
}

TEST(Blockage, VerticalConditionFollowsLinkHeight)
{
    const Vec3 mbs{0, 0, 25};
    const Vec3 uam{100, 0, 125};
    // Link height at 50 m is 25 + 50 * 100 / 100 = 75 m.
    EXPECT_TRUE(uam::vertical_blocks(mbs, uam, 50.0, 80.0));
    EXPECT_FALSE(uam::vertical_blocks(mbs, uam, 50.0, 70.0));
    // Descending link: same geometry mirrored.
    EXPECT_TRUE(uam::vertical_blocks(uam, mbs, 50.0, 80.0));
    EXPECT_FALSE(uam::vertical_blocks(uam, mbs, 50.0, 70.0));
}

TEST(Blockage, VerticalConditionRejectsOffLinkPositions)
{
    const Vec3 mbs{0, 0, 25};
    const Vec3 uam{100, 0, 125};
    EXPECT_THROW(uam::vertical_blocks(mbs, uam, -1.0, 80.0), std::invalid_argument);
    EXPECT_THROW(uam::vertical_blocks(mbs, uam, 101.0, 80.0), std::invalid_argument);
}

TEST(Blockage, HorizontalConditionCornerAngles)
{
    const Vec3 mbs{0, 0, 25};
    const Vec3 uam{100, 100, 25};
    EXPECT_TRUE(uam::horizontal_angle_condition(mbs, uam, 50, 50, 20, 20));
    EXPECT_TRUE(uam::horizontal_blocks(mbs, uam, 50, 50, 20, 20));
    EXPECT_FALSE(uam::horizontal_blocks(mbs, uam, 50, -50, 20, 20));
    EXPECT_FALSE(uam::horizontal_angle_condition(mbs, uam, 50, -50, 20, 20));
}

TEST(Blockage, DegenerateFootprintBlocksOnlyOnSegment)
{
    const Vec3 mbs{0, 0, 25};
    const Vec3 uam{100, 100, 25};
    EXPECT_TRUE(uam::horizontal_blocks(mbs, uam, 50, 50, 0, 0));
    EXPECT_FALSE(uam::horizontal_blocks(mbs, uam, 50, 50.5, 0, 0));
    EXPECT_FALSE(uam::horizontal_blocks(mbs, uam, 150, 150, 0, 0));
}

TEST(Blockage, MbsInsideFootprintSatisfiesAngleCondition)
{
    EXPECT_TRUE(uam::horizontal_angle_condition({0, 0, 25}, {100, 0, 25}, 5, 5, 40, 40));
}

TEST(Blockage, HorizontalConditionMatchesSegmentRectangleOracle)
{
    uam::Rng rng(31);
    for (int i = 0; i < 20000; ++i) {
        const Vec3 a{rng.uniform(-200, 200), rng.uniform(-200, 200), 25};
        const Vec3 b{rng.uniform(-200, 200), rng.uniform(-200, 200), 100};
        const Building bb = box(rng.uniform(-200, 200), rng.uniform(-200, 200), 1.0, rng.uniform(1, 60),
                                rng.uniform(1, 60));
        ASSERT_EQ(uam::horizontal_blocks(a, b, bb.center.x, bb.center.y, bb.W, bb.D),
                  segment_touches_rect(a.x, a.y, b.x, b.y, bb))
            << i;
    }
}

TEST(Blockage, CountsOnTrivialScenes)
{
    const std::vector<Building> none;
    EXPECT_EQ(uam::count_blockers({0, 0, 25}, {300, 0, 10}, none), 0u);
    const std::vector<Building> one{box(0, 0, 100)};
    // UAM straight above the MBS: no building lies strictly between in 2D.
    EXPECT_EQ(uam::count_blockers({0, 0, 25}, {0, 0, 150}, std::vector<Building>{box(10, 0, 300)}), 0u);
    EXPECT_EQ(uam::count_blockers({-100, 0, 25}, {100, 0, 10}, one), 1u);
    EXPECT_EQ(uam::count_blockers({-100, 0, 25}, {100, 0, 150}, one), 1u);
    EXPECT_EQ(uam::count_blockers({-100, 0, 25}, {100, 0, 300}, one), 0u);
}

TEST(Blockage, ConditionCountMatchesOracleOnRandomLinks)
{
    uam::SpatialParams p;
    p.window_half_width = 600.0;
    const auto buildings = uam::sample_buildings(p, 77);
    uam::Rng rng(78);
    std::vector<std::pair<Vec3, Vec3>> links;
    for (int i = 0; i < 3000; ++i) {
        const Vec3 mbs{rng.uniform(-500, 500), rng.uniform(-500, 500), 25};
        const Vec3 u = uam::sample_uam_position(rng, buildings, 500, 1.5, 300);
        links.emplace_back(mbs, u);
    }
    for (const auto& row : uam::audit_blockage(links, buildings))
        ASSERT_FALSE(row.mismatch()) << "link " << row.link_id;
}

TEST(Blockage, IndexMatchesLinearScan)
{
    uam::SpatialParams p;
    p.window_half_width = 800.0;
    const auto buildings = uam::sample_buildings(p, 3);
    const uam::BlockageIndex index(buildings);
    EXPECT_EQ(index.size(), buildings.size());
    uam::Rng rng(4);
    for (int i = 0; i < 2000; ++i) {
        const Vec3 a{rng.uniform(-900, 900), rng.uniform(-900, 900), 25};
        const Vec3 b{rng.uniform(-900, 900), rng.uniform(-900, 900), rng.uniform(0, 300)};
        ASSERT_EQ(index.count(a, b), uam::count_blockers(a, b, buildings));
        ASSERT_EQ(index.count_horizontal(a, b), uam::count_horizontal_blockers(a, b, buildings));
    }
}

TEST(Blockage, PenetrationLoss)
{
    EXPECT_DOUBLE_EQ(uam::penetration_loss(0, {0.0}), 1.0);
    EXPECT_DOUBLE_EQ(uam::penetration_loss(3, {0.0}), 0.0);
    EXPECT_DOUBLE_EQ(uam::penetration_loss(2, {0.5}), 0.25);
    EXPECT_DOUBLE_EQ(uam::penetration_loss(0, {0.5}), 1.0);
}

TEST(Blockage, EvaluateAppliesPenetration)
{
    const std::vector<Building> two{box(-50, 0, 100), box(50, 0, 100)};
    const uam::BlockageIndex index(two);
    const auto out = index.evaluate({-100, 0, 25}, {100, 0, 10}, {0.5});
    EXPECT_EQ(out.n_blockers, 2u);
    EXPECT_DOUBLE_EQ(out.loss_linear, 0.25);
}

} // namespace
