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

#include "uam/link.hpp"

#include <algorithm>
#include <stdexcept>

#include "uam/units.hpp"

namespace uam {

double received_power(double tx_mw, double gain_db, double loss_linear, double r, double dh, double alpha,
                      double fading)
{
    if (r * r + dh * dh <= 0.0)
        throw std::invalid_argument("received_power: coincident endpoints");
    return tx_mw * db_to_linear(gain_db) * loss_linear * path_gain(r, dh, alpha) * fading;
}

std::vector<SiteLink> site_links(const Vec3& uam, const RadioScene& scene)
{
    const auto& sites = *scene.sites;
    const PenetrationParams pen{scene.channel.gamma};
    std::vector<SiteLink> out(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const Vec3& s = sites[i];
        SiteLink& l = out[i];
        l.geometry.r_UM = link_2d_distance(s, uam);
        l.geometry.elevation_deg = rad_to_deg(link_elevation(s, uam));
        l.geometry.azimuth_deg = rad_to_deg(link_azimuth(s, uam));
        l.dh = uam.z - s.z;
        l.distance_3d = link_3d_distance(s, uam);
        if (scene.blockage) {
            const BlockageOutcome b = scene.blockage->evaluate(s, uam, pen);
            l.geometry.n_blockers = b.n_blockers;
            l.loss_linear = b.loss_linear;
        }
        l.path_gain = l.distance_3d > 0.0 ? path_gain(l.geometry.r_UM, l.dh, scene.channel.alpha) : 0.0;
    }
    return out;
}

Association associate(const Vec3& uam, const RadioScene& scene, Layer layer, const std::vector<SiteLink>& links)
{
    const auto& sites = *scene.sites;
    const double p_tx = dbm_to_mw(scene.channel.p_tx_dbm);
    Association best;
    double best_d = 0.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const SiteLink& l = links[i];
        if (l.loss_linear <= 0.0 || l.path_gain <= 0.0)
            continue;
        const auto [tx, g] = best_beam(i, sites[i], uam, layer, *scene.plan, scene.antenna);
        const double rsrp = p_tx * db_to_linear(g) * l.loss_linear * l.path_gain;
        const bool better = !best.served || rsrp > best.rsrp_mw || (rsrp == best.rsrp_mw && l.distance_3d < best_d);
        if (better) {
            best = Association{true, i, tx, g, rsrp};
            best_d = l.distance_3d;
        }
    }
    return best;
}

std::vector<double> draw_fading(Rng& rng, std::size_t n_sites, int m)
{
    std::vector<double> f(n_sites);
    for (auto& x : f)
        x = nakagami_power(rng, m);
    return f;
}

SinrSample sinr(const Vec3& uam, const RadioScene& scene, const Association& assoc, const std::vector<SiteLink>& links,
                const std::vector<double>& fading)
{
    SinrSample out;
    const BeamPlan& plan = *scene.plan;
    const Transmitter& serving = plan.tx.at(assoc.tx);
    const double n_colors = plan.spec.n_colors();
    out.noise_mw = dbm_to_mw(scene.channel.noise_dbm) * serving.width() / n_colors;
    if (!assoc.served)
        return out;
    const double p_tx = dbm_to_mw(scene.channel.p_tx_dbm);
    out.signal_mw = assoc.rsrp_mw * fading[assoc.site];
    const auto& sites = *scene.sites;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (i == assoc.site)
            continue;
        const SiteLink& l = links[i];
        if (l.loss_linear <= 0.0 || l.path_gain <= 0.0)
            continue;
        double gain_sum = 0.0;
        for (std::size_t k = plan.site_first[i]; k < plan.site_first[i + 1]; ++k) {
            const Transmitter& t = plan.tx[k];
            const int overlap = std::min(t.color_hi, serving.color_hi) - std::max(t.color_lo, serving.color_lo);
            if (overlap <= 0)
                continue;
            gain_sum += db_to_linear(transmitter_gain(t, sites[i], uam, plan, scene.antenna)) *
                        static_cast<double>(overlap) / t.width();
        }
        out.interference_mw += p_tx * gain_sum * l.loss_linear * l.path_gain * fading[i];
    }
    out.sinr = out.signal_mw / (out.interference_mw + out.noise_mw);
    return out;
}

} // namespace uam
