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
#include <numbers>

#include "uam/analytics.hpp"
#include "uam/blockage.hpp"
#include "uam/units.hpp"

namespace {

using uam::AnalyticModel;
using uam::SpatialParams;

constexpr double kPi = std::numbers::pi;

TEST(Analytics, VerticalProbabilityAtEqualHeights)
{
    SpatialParams s;
    const double expected = std::exp(-s.h_M * s.h_M / (2.0 * s.sigma_hB * s.sigma_hB));
    EXPECT_NEAR(uam::vertical_block_probability(100.0, s.h_M, s), expected, 1e-12);
    // Continuous through the equal-height point: a short span averages to its midpoint.
    const double mid = s.h_M + 0.5e-4;
    EXPECT_NEAR(uam::vertical_block_probability(100.0, s.h_M + 1e-4, s),
                std::exp(-mid * mid / (2.0 * s.sigma_hB * s.sigma_hB)), 1e-9);
}

TEST(Analytics, VerticalProbabilityMatchesMonteCarlo)
{
    SpatialParams s;
    const double h_U = 150.0;
    const double r = 200.0;
    uam::Rng rng(2024);
    const int n = 1000000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        const double r_bm = rng.uniform(0.0, r);
        const double link_h = s.h_M + r_bm * (h_U - s.h_M) / r;
        hits += rng.rayleigh(s.sigma_hB) >= link_h ? 1 : 0;
    }
    const double mc = static_cast<double>(hits) / n;
    EXPECT_NEAR(uam::vertical_block_probability(r, h_U, s), mc, 0.005 * mc);
}

TEST(Analytics, VerticalProbabilityTendsToOneForTallCities)
{
    SpatialParams s;
    s.sigma_hB = 1e4;
    EXPECT_NEAR(uam::vertical_block_probability(100.0, 300.0, s), 1.0, 1e-3);
}

TEST(Analytics, HorizontalMeanIntercept)
{
    SpatialParams s;
    EXPECT_NEAR(uam::mean_horizontal_blockers(0.0, s), 300e-6 * 40.0 * 40.0, 1e-15);
}

TEST(Analytics, HorizontalMeanIsAngleAverage)
{
    SpatialParams s;
    s.W = 30.0;
    s.D = 55.0;
    for (double r : {10.0, 100.0, 750.0}) {
        // Midpoint rule over a full turn; the integrand is smooth between its kinks at multiples of pi/2.
        const int n = 400000;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double th = (i + 0.5) * 2.0 * kPi / n;
            acc += 300e-6 * (r * s.W * std::abs(std::sin(th)) + r * s.D * std::abs(std::cos(th)) + s.W * s.D);
        }
        EXPECT_NEAR(uam::mean_horizontal_blockers(r, s), acc / n, 1e-6 * acc / n);
    }
}

TEST(Analytics, ThreeDimensionalMeanAndLoss)
{
    SpatialParams s;
    const double nbp = uam::mean_blockers_3d(200.0, 150.0, s);
    EXPECT_NEAR(nbp, uam::vertical_block_probability(200.0, 150.0, s) * uam::mean_horizontal_blockers(200.0, s), 1e-15);
    uam::ChannelParams ch;
    ch.gamma = 1.0;
    EXPECT_DOUBLE_EQ(uam::expected_penetration_loss(200.0, 150.0, s, ch), 1.0);
    ch.gamma = 0.5;
    EXPECT_NEAR(uam::expected_penetration_loss(200.0, 150.0, s, ch), std::pow(0.5, nbp), 1e-15);
    EXPECT_NEAR(uam::visibility_probability(200.0, 150.0, s), std::exp(-nbp), 1e-15);
}

TEST(Analytics, HorizontalMeanMatchesEmpiricalCount)
{
    SpatialParams s;
    s.window_half_width = 700.0;
    const double r = 200.0;
    uam::Rng rng(55);
    double total = 0.0;
    const int drops = 4000;
    for (int d = 0; d < drops; ++d) {
        const auto b = uam::sample_buildings(s, 1000 + d);
        const double th = rng.uniform(0.0, 2.0 * kPi);
        const uam::Vec3 a{-0.5 * r * std::cos(th), -0.5 * r * std::sin(th), 25.0};
        const uam::Vec3 c{0.5 * r * std::cos(th), 0.5 * r * std::sin(th), 150.0};
        total += static_cast<double>(uam::count_horizontal_blockers(a, c, b));
    }
    const double expected = uam::mean_horizontal_blockers(r, s);
    // Poisson counts: standard error sqrt(mean / drops).
    EXPECT_NEAR(total / drops, expected, 4.0 * std::sqrt(expected / drops));
}

AnalyticModel no_buildings_model()
{
    AnalyticModel m;
    m.spatial.lambda_B = 0.0;
    m.beams.omni = true;
    m.beams.n_beam = 1;
    m.beams.delta = 1;
    return m;
}

TEST(Analytics, LaplaceAtZeroIsOne)
{
    const auto m = no_buildings_model();
    EXPECT_DOUBLE_EQ(uam::interference_laplace(0.0, 200.0, 100.0, m)[0], 1.0);
}

TEST(Analytics, LaplaceDecreasesInS)
{
    AnalyticModel m;
    m.beams = {.omni = true};
    double prev = 1.0;
    for (double s = 1e5; s < 1e12; s *= 3.0) {
        const double v = uam::interference_laplace(s, 150.0, 60.0, m)[0];
        EXPECT_LE(v, prev);
        EXPECT_GE(v, 0.0);
        prev = v;
    }
    EXPECT_LT(prev, 0.5);
}

TEST(Analytics, LaplaceDerivativesMatchFiniteDifferences)
{
    for (int nakagami : {1, 2, 3}) {
        AnalyticModel m;
        m.beams = {.omni = true};
        m.channel.m = nakagami;
        m.quad.rel_tol = 1e-12;
        m.quad.abs_tol = 0.0;
        const double r = 180.0;
        const double h = 80.0;
        const double s = 2.0 / uam::path_gain(r, h - m.spatial.h_M, m.channel.alpha);
        const double eps = 1e-3 * s;
        const int order = 3;
        const auto mid = uam::interference_laplace(s, r, h, m, order);
        const auto up = uam::interference_laplace(s + eps, r, h, m, order);
        const auto down = uam::interference_laplace(s - eps, r, h, m, order);
        for (int k = 1; k <= order; ++k) {
            const double fd = (up[k - 1] - down[k - 1]) / (2.0 * eps);
            EXPECT_NEAR(mid[k], fd, 1e-4 * std::abs(mid[k])) << "m=" << nakagami << " k=" << k;
        }
    }
}

TEST(Analytics, RayleighPppCoverageClosedForm)
{
    // Interference-limited PPP, Rayleigh fading, alpha = 4, UAM at antenna height:
    // P_c = 1 / (1 + sqrt(T) (pi/2 - atan(1 / sqrt(T)))).
    auto m = no_buildings_model();
    // The interference tail beyond the truncation radius shrinks as its inverse square.
    m.quad.truncation_factor = 80.0;
    for (double tdb : {-5.0, 0.0, 5.0, 10.0}) {
        const double T = uam::db_to_linear(tdb);
        const double rho = std::sqrt(T) * (kPi / 2.0 - std::atan(1.0 / std::sqrt(T)));
        EXPECT_NEAR(uam::coverage_at_height(T, m.spatial.h_M, m).value, 1.0 / (1.0 + rho), 1e-3) << tdb;
    }
}

TEST(Analytics, CoverageIsNonIncreasingInThreshold)
{
    AnalyticModel m;
    m.h_panels = 2;
    double prev = 1.0;
    for (double tdb = -20.0; tdb <= 30.0; tdb += 5.0) {
        const double v = uam::coverage_probability(uam::db_to_linear(tdb), m).value;
        EXPECT_LE(v, prev + 1e-9);
        prev = v;
    }
}

TEST(Analytics, CoverageTendsToOneAtLowThresholdWithoutBuildings)
{
    auto m = no_buildings_model();
    m.h_panels = 2;
    EXPECT_GT(uam::coverage_probability(1e-4, m).value, 0.98);
}

TEST(Analytics, ReuseWithOmniReducesToCoverageProbability)
{
    AnalyticModel m;
    m.beams = {.omni = true};
    m.h_panels = 2;
    const double T = 1.0;
    EXPECT_DOUBLE_EQ(uam::coverage_with_reuse(T, m).value, uam::coverage_probability(T, m).value);
}

TEST(Analytics, ConditionalCoverageIsLaplaceForRayleigh)
{
    auto m = no_buildings_model();
    const double r = 250.0;
    const double h = 90.0;
    const double T = 2.0;
    const double s = T / uam::path_gain(r, h - m.spatial.h_M, m.channel.alpha);
    EXPECT_NEAR(uam::conditional_coverage(T, r, h, m), uam::interference_laplace(s, r, h, m)[0], 1e-12);
}

TEST(Analytics, CapacityScalings)
{
    AnalyticModel m;
    m.beams = {.n_beam = 3, .delta = 3};
    m.h_panels = 2;
    uam::CapacityParams cap;
    const double share = uam::bandwidth_share(m, cap);
    EXPECT_DOUBLE_EQ(share, 20e6 / 9.0);
    EXPECT_NEAR(uam::required_sir(m, cap), std::expm1(cap.target_rate() / share), 1e-15);

    const double rate = uam::achievable_rate(m, cap);
    auto wide = cap;
    wide.bandwidth_hz *= 2.0;
    EXPECT_NEAR(uam::achievable_rate(m, wide), 2.0 * rate, 1e-9 * rate);

    double prev = 1.0;
    for (double tau : {1e3, 1e4, 1e5, 1e6}) {
        auto c = cap;
        c.tau_R_bits = tau;
        const double r = uam::reliability(m, c);
        EXPECT_LE(r, prev + 1e-12);
        prev = r;
    }
}

TEST(Analytics, SupportableUamsDecreaseWithTargetReliability)
{
    AnalyticModel m;
    m.beams = {.n_beam = 3, .delta = 3};
    m.h_panels = 2;
    uam::CapacityParams cap;
    double prev = 1e300;
    for (double R : {0.5, 0.6, 0.7, 0.8}) {
        const auto s = uam::supportable_uams(R, m, cap);
        ASSERT_TRUE(s.feasible) << R;
        EXPECT_LT(s.uams_per_sector, prev);
        prev = s.uams_per_sector;
    }
    auto half = cap;
    half.bandwidth_hz *= 0.5;
    const auto a = uam::supportable_uams(0.6, m, cap);
    const auto b = uam::supportable_uams(0.6, m, half);
    EXPECT_NEAR(b.uams_per_sector, 0.5 * a.uams_per_sector, 1e-9 * a.uams_per_sector);
}

TEST(Analytics, InverseCoverageRoundTrips)
{
    AnalyticModel m;
    m.beams = {.n_beam = 3, .delta = 3};
    m.h_panels = 2;
    const auto T = uam::inverse_coverage(0.6, m);
    ASSERT_TRUE(T.has_value());
    EXPECT_NEAR(uam::coverage_with_reuse(*T, m).value, 0.6, 2e-3);
    EXPECT_FALSE(uam::inverse_coverage(0.99999, m).has_value());
}

} // namespace
