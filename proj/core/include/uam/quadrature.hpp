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

#include <functional>
#include <span>
#include <vector>

namespace uam {

/// Numerical integration controls shared by the analytic evaluators.
struct QuadratureSpec {
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    int max_depth = 12;
    /// Semi-infinite radial integrals are cut at this multiple of the mean
    /// nearest-MBS distance 1 / (2 sqrt(lambda)).
    double truncation_factor = 20.0;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (7/15) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec);

/// Node/weight pairs of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Fixed n-point Gauss-Legendre on [a, b] split into `panels` equal pieces.
template <class F>
double integrate_fixed(F&& f, double a, double b, int n, int panels = 1)
{
    const auto& rule = gauss_legendre(n);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    return 0.5 * h * sum;
}

} // namespace uam
