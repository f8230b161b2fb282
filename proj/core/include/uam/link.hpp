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
#include <vector>

#include "uam/antenna.hpp"
#include "uam/blockage.hpp"
#include "uam/channel.hpp"
#include "uam/geometry.hpp"
#include "uam/rng.hpp"

namespace uam {

struct LinkGeometry {
    double r_UM = 0.0;
    double elevation_deg = 0.0;
    double azimuth_deg = 0.0;
    std::size_t n_blockers = 0;
    bool serving = false;
};

struct SinrSample {
    double signal_mw = 0.0;
    double interference_mw = 0.0;
    double noise_mw = 0.0;
    double sinr = 0.0;
};

/// P * G * L * (r^2 + dh^2)^(-alpha/2) * fading, in mW. Throws on a zero 3D distance.
double received_power(double tx_mw, double gain_db, double loss_linear, double r, double dh, double alpha,
                      double fading);

/// Unit-mean Nakagami-m power gain.
inline double nakagami_power(Rng& rng, int m) { return rng.gamma(m, 1.0 / m); }

/// Read-only view of everything a link evaluation needs. The referenced objects
/// must outlive the scene.
struct RadioScene {
    const std::vector<Vec3>* sites = nullptr;
    const BeamPlan* plan = nullptr;
    const BlockageIndex* blockage = nullptr;
    ChannelParams channel;
    AntennaParams antenna;
};

/// Per-site propagation toward one UAM, shared by association and SINR.
struct SiteLink {
    LinkGeometry geometry;
    double dh = 0.0;
    double loss_linear = 1.0;
    double path_gain = 0.0;
    double distance_3d = 0.0;
};

std::vector<SiteLink> site_links(const Vec3& uam, const RadioScene& scene);

struct Association {
    bool served = false;
    std::size_t site = 0;
    std::size_t tx = 0;
    double gain_db = 0.0;
    /// Mean received power without fading, mW.
    double rsrp_mw = 0.0;
};

/// Strongest mean RSRP over sites, each through its best transmitter on `layer`.
/// Ties go to the nearer site in 3D, then the lower index. Unserved when every
/// candidate is fully blocked.
Association associate(const Vec3& uam, const RadioScene& scene, Layer layer, const std::vector<SiteLink>& links);

/// Draws one fading gain per site, in site order.
std::vector<double> draw_fading(Rng& rng, std::size_t n_sites, int m);

/// SINR on the serving transmitter's band. Every transmitter of another site
/// whose band overlaps contributes in proportion to the overlap.
SinrSample sinr(const Vec3& uam, const RadioScene& scene, const Association& assoc, const std::vector<SiteLink>& links,
                const std::vector<double>& fading);

} // namespace uam
