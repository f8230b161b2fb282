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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "uam/rng.hpp"

namespace uam {

inline double mean(std::span<const double> x)
{
    if (x.empty())
        return 0.0;
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    [[nodiscard]] bool excludes(double v) const { return v < lo || v > hi; }
};

/// Percentile bootstrap interval for the mean.
inline Interval bootstrap_mean_ci(std::span<const double> x, std::size_t resamples, std::uint64_t seed,
                                  double level = 0.95)
{
    if (x.empty())
        throw std::invalid_argument("bootstrap_mean_ci: empty sample");
    Rng rng(seed);
    std::vector<double> means(resamples);
    for (auto& m : means) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += x[rng.below(x.size())];
        m = s / static_cast<double>(x.size());
    }
    std::sort(means.begin(), means.end());
    const double tail = 0.5 * (1.0 - level);
    const auto at = [&](double q) {
        const auto k = static_cast<std::size_t>(q * static_cast<double>(resamples - 1) + 0.5);
        return means[std::min(k, resamples - 1)];
    };
    return {at(tail), at(1.0 - tail)};
}

} // namespace uam
