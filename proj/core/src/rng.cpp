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

#include "uam/rng.hpp"

#include <cmath>

namespace uam {

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> streams) noexcept
{
    std::uint64_t h = splitmix64(base ^ 0x5851f42d4c957f2dULL);
    for (auto s : streams)
        h = splitmix64(h ^ splitmix64(s + 0x632be59bd9b4e019ULL));
    return h;
}

std::uint64_t Rng::poisson(double mean)
{
    if (mean <= 0.0)
        return 0;
    return std::poisson_distribution<std::uint64_t>(mean)(engine_);
}

double Rng::rayleigh(double sigma)
{
    // Inverse CDF; 1 - U keeps the log argument in (0, 1].
    const double u = 1.0 - uniform01();
    return sigma * std::sqrt(-2.0 * std::log(u));
}

} // namespace uam
