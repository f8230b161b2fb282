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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uam/geometry.hpp"

namespace uam {

/// Parametric sector antenna. Angles in degrees, floors in dB (positive numbers).
struct AntennaParams {
    double phi_3db = 65.0;
    double theta_3db = 65.0;
    double sla_v = 30.0;
    double a_m = 30.0;
    /// Exponent on the (angle / beamwidth) ratio: 1 or 2.
    int pattern_exponent = 2;

    [[nodiscard]] std::vector<std::string> violations() const;
};

/// Vertical pattern in dB. phi and tilt are positive downward.
double vertical_gain(double phi_deg, double tilt_deg, const AntennaParams& p);
/// Horizontal element pattern in dB; theta is relative to the sector boresight.
double horizontal_gain(double theta_deg, const AntennaParams& p);
/// Combined element gain in dB, floored at -a_m.
double element_gain(double phi_deg, double tilt_deg, double theta_deg, const AntennaParams& p);

/// Half beamwidth of one of n_beam beams splitting a 120 degree sector.
constexpr double beam_half_width_deg(int n_beam) { return 60.0 / n_beam; }
/// Azimuth (relative to the sector boresight) where beam n (1-based) peaks.
constexpr double beam_center_deg(int n, int n_beam)
{
    return -60.0 + (2.0 * n - 1.0) * beam_half_width_deg(n_beam);
}
/// Horizontal gain in dB of beam n (1-based) at theta relative to the sector boresight.
double beam_gain(double theta_deg, int n, int n_beam, double a_m, int exponent);

enum class Layer { Single, Up, Down };

/// How every site is sectorized, beamformed, tilted and colored.
struct BeamPlanSpec {
    bool omni = false;
    int sectors = 3;
    int n_beam = 1;
    int delta = 1;
    /// Boresight of sector 0; sector k points at offset + k * 360 / sectors.
    double sector_offset_deg = 30.0;
    /// Tilt of the single layer, or of the upward layer when multi_layer is set.
    double tilt_deg = 12.0;
    bool multi_layer = false;
    double tilt_down_deg = 12.0;

    [[nodiscard]] std::vector<std::string> violations() const;
    /// Number of equal sub-bands the system bandwidth is split into.
    [[nodiscard]] int n_colors() const { return omni ? 1 : delta * n_beam; }
};

/// One radiating element of a site: a beam, a sector-wide downward layer, or an omni antenna.
struct Transmitter {
    std::size_t site = 0;
    int sector = 0;
    /// 1-based beam index; 0 for sector-wide or omni patterns.
    int beam = 0;
    Layer layer = Layer::Single;
    double boresight_deg = 0.0;
    double tilt_deg = 0.0;
    /// Occupied sub-bands [color_lo, color_hi).
    int color_lo = 0;
    int color_hi = 1;

    [[nodiscard]] int width() const { return color_hi - color_lo; }
};

struct BeamPlan {
    BeamPlanSpec spec;
    std::vector<Transmitter> tx;
    /// tx indices of site s are [site_first[s], site_first[s + 1]).
    std::vector<std::size_t> site_first;

    [[nodiscard]] std::size_t n_sites() const { return site_first.empty() ? 0 : site_first.size() - 1; }
};

/// Per-site sector group offsets. Grid layouts use offset 0 everywhere; random
/// layouts draw an offset and a beam permutation per site from the seed.
enum class Coloring { Grid, Random };

BeamPlan assign_reuse_colors(const BeamPlanSpec& spec, std::size_t n_sites, Coloring coloring, std::uint64_t seed);

/// Gain in dB of transmitter t from its site toward the UAM.
double transmitter_gain(const Transmitter& t, const Vec3& site, const Vec3& uam, const BeamPlan& plan,
                        const AntennaParams& params);

/// Best transmitter of `site` restricted to `layer` (Single and Up are the same
/// layer). Ties go to the lowest transmitter index.
std::pair<std::size_t, double> best_beam(std::size_t site, const Vec3& site_pos, const Vec3& uam, Layer layer,
                                         const BeamPlan& plan, const AntennaParams& params);

/// Sum-of-gain objective maximized by the tilt search.
enum class TiltObjective { Linear, Decibel };

struct TiltSearch {
    double imd = 750.0;
    double h_M = 25.0;
    double step_deg = 0.5;
    TiltObjective objective = TiltObjective::Linear;
    /// Gauss-Legendre panels over r and theta.
    int r_panels = 64;
    int theta_panels = 16;
};

/// Integral of the element gain over r in [0, imd/2] and theta in [-theta_3db, theta_3db].
double tilt_objective(double tilt_deg, double h_U, const TiltSearch& search, const AntennaParams& params);

/// Grid argmax of tilt_objective over [-90, 90]; ties go to the smaller |tilt|.
double optimal_tilt(double h_U, const TiltSearch& search, const AntennaParams& params);

} // namespace uam
