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

#include "uam/quadrature.hpp"

namespace {

TEST(Quadrature, AdaptiveIntegratesSmoothFunctions)
{
    const uam::QuadratureSpec spec;
    const auto r = uam::integrate([](double x) { return std::exp(-x) * x; }, 0.0, 50.0, spec);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 1.0 - 51.0 * std::exp(-50.0), 1e-9);
    const auto s = uam::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, spec);
    EXPECT_NEAR(s.value, 2.0, 1e-10);
}

TEST(Quadrature, GaussLegendreIsExactForPolynomials)
{
    for (int n : {2, 5, 8, 16}) {
        const auto& rule = uam::gauss_legendre(n);
        ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (double w : rule.weights)
            wsum += w;
        EXPECT_NEAR(wsum, 2.0, 1e-13);
        // Degree 2n - 1 is integrated exactly.
        const int deg = 2 * n - 1;
        const double got = uam::integrate_fixed([deg](double x) { return std::pow(x, deg - 1) * deg; }, 0.0, 1.0, n);
        EXPECT_NEAR(got, 1.0, 1e-12);
    }
}

TEST(Quadrature, PanelsRefine)
{
    const auto f = [](double x) { return 1.0 / (1.0 + x * x); };
    EXPECT_NEAR(uam::integrate_fixed(f, -20.0, 20.0, 8, 32), 2.0 * std::atan(20.0), 1e-8);
}

} // namespace
