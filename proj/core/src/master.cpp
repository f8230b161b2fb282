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

#include "uam/master.hpp"

#include <cmath>
#include <stdexcept>

#include "uam/units.hpp"

namespace uam {

std::optional<MasterSelection> select_master(const RateReport& report)
{
    MasterSelection sel;
    for (std::size_t j = 0; j < report.rates.size(); ++j) {
        const double d = report.deficiency(j);
        if (d < 0.0) {
            sel.failures.push_back(j);
            sel.deficit -= d;
        }
    }
    if (sel.failures.empty())
        return std::nullopt;
    bool found = false;
    double best = 0.0;
    for (std::size_t j = 0; j < report.rates.size(); ++j) {
        const double d = report.deficiency(j);
        if (d >= 0.0 && d > sel.deficit && (!found || d > best)) {
            found = true;
            best = d;
            sel.master = j;
        }
    }
    if (!found)
        return std::nullopt;
    return sel;
}

std::vector<std::string> MasterLinkParams::violations() const
{
    std::vector<std::string> out;
    if (!(bandwidth_hz > 0.0))
        out.emplace_back("master.bandwidth_hz must be > 0");
    if (!std::isfinite(p_tx_dbm))
        out.emplace_back("master.p_tx_dbm must be finite");
    return out;
}

double master_snr(const Vec3& master, const Vec3& uam, const BlockageIndex* blockage, const MasterLinkParams& params,
                  const ChannelParams& channel, double system_bandwidth_hz, double fading)
{
    const double r = link_2d_distance(master, uam);
    const double dh = uam.z - master.z;
    if (r * r + dh * dh <= 0.0)
        throw std::invalid_argument("master_snr: coincident endpoints");
    double loss = 1.0;
    if (blockage)
        loss = blockage->evaluate(master, uam, PenetrationParams{channel.gamma}).loss_linear;
    const double noise = dbm_to_mw(channel.noise_dbm) * params.bandwidth_hz / system_bandwidth_hz;
    return dbm_to_mw(params.p_tx_dbm) * loss * path_gain(r, dh, channel.alpha) * fading / noise;
}

std::vector<double> assistive_rate(std::span<const double> snr, const MasterLinkParams& params)
{
    std::vector<double> out;
    out.reserve(snr.size());
    const double share = params.bandwidth_hz / static_cast<double>(snr.size());
    for (double s : snr)
        out.push_back(share * std::log1p(s));
    return out;
}

std::vector<double> assistive_rate(const Vec3& master, std::span<const Vec3> failures, const BlockageIndex* blockage,
                                   const MasterLinkParams& params, const ChannelParams& channel,
                                   double system_bandwidth_hz)
{
    std::vector<double> snr;
    snr.reserve(failures.size());
    for (const auto& u : failures)
        snr.push_back(master_snr(master, u, blockage, params, channel, system_bandwidth_hz));
    return assistive_rate(snr, params);
}

} // namespace uam
