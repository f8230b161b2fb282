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

#include <cmath>
#include <string>
#include <vector>

namespace uam {

/// Radio channel shared by the analytic and simulated links.
struct ChannelParams {
    double p_tx_dbm = 46.0;
    double alpha = 4.0;
    /// Nakagami shape; the power gain is Gamma(m, 1/m).
    int m = 1;
    /// Thermal noise over the full system bandwidth.
    double noise_dbm = -92.0;
    /// Per-building penetration scale in [0, 1].
    double gamma = 0.0;

    [[nodiscard]] std::vector<std::string> violations() const;
};

/// (r^2 + dh^2)^(-alpha/2).
inline double path_gain(double r, double dh, double alpha) { return std::pow(r * r + dh * dh, -0.5 * alpha); }

} // namespace uam
