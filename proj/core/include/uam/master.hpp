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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uam/blockage.hpp"
#include "uam/channel.hpp"
#include "uam/geometry.hpp"

namespace uam {

/// Per-UAM rates against a common target; D_j = rate_j - target.
struct RateReport {
    std::vector<double> rates;
    double target = 0.0;

    [[nodiscard]] double deficiency(std::size_t j) const { return rates[j] - target; }
};

struct MasterSelection {
    std::size_t master = 0;
    /// UAMs with D_j < 0, ascending.
    std::vector<std::size_t> failures;
    /// Sum of -D_j over the failures.
    double deficit = 0.0;
};

/// Surplus-based master choice. Empty when nobody fails or no UAM's surplus
/// strictly exceeds the total deficit. Ties on surplus go to the lowest index.
std::optional<MasterSelection> select_master(const RateReport& report);

struct MasterLinkParams {
    double p_tx_dbm = 23.0;
    double bandwidth_hz = 5e6;

    [[nodiscard]] std::vector<std::string> violations() const;
};

/// SNR of the broadcast from `master` to `uam` on the dedicated band. Noise is the
/// channel noise scaled from system_bandwidth_hz to the broadcast bandwidth.
double master_snr(const Vec3& master, const Vec3& uam, const BlockageIndex* blockage, const MasterLinkParams& params,
                  const ChannelParams& channel, double system_bandwidth_hz, double fading = 1.0);

/// Equal split of the broadcast band: (BW / N_UF) ln(1 + SNR_j) for each failure UAM.
std::vector<double> assistive_rate(std::span<const double> snr, const MasterLinkParams& params);

/// Convenience: SNRs (unit fading) from positions, then assistive_rate.
std::vector<double> assistive_rate(const Vec3& master, std::span<const Vec3> failures, const BlockageIndex* blockage,
                                   const MasterLinkParams& params, const ChannelParams& channel,
                                   double system_bandwidth_hz);

} // namespace uam
