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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uam/rng.hpp"

namespace uam {

/// Point in meters; z is height above ground.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Spatial deployment parameters. Densities are per km^2, lengths in meters.
struct SpatialParams {
    double lambda_M = 2.0528;   // hexagonal layout with 750 m inter-site distance
    double lambda_U = 20.0;
    double lambda_B = 300.0;
    double h_M = 25.0;
    double h_U_min = 1.5;
    double h_U_max = 300.0;
    double W = 40.0;
    double D = 40.0;
    double sigma_hB = 20.0;
    double window_half_width = 1500.0;
    /// Drop buildings whose volume would enclose an MBS antenna.
    bool clear_mbs_sites = true;

    /// Every violated invariant, one message each. Empty when valid.
    [[nodiscard]] std::vector<std::string> violations() const;
    /// Throws std::invalid_argument listing every violation.
    void validate() const;
    [[nodiscard]] double window_area_km2() const;
};

/// Axis-aligned box building. center.z holds the roof height.
struct Building {
    Vec3 center;
    double W = 0.0;
    double D = 0.0;

    [[nodiscard]] double height() const { return center.z; }
    [[nodiscard]] double x_min() const { return center.x - 0.5 * W; }
    [[nodiscard]] double x_max() const { return center.x + 0.5 * W; }
    [[nodiscard]] double y_min() const { return center.y - 0.5 * D; }
    [[nodiscard]] double y_max() const { return center.y + 0.5 * D; }

    friend bool operator==(const Building&, const Building&) = default;
};

/// Regular hexagonal (triangular-lattice) MBS layout centered in the window.
struct GridLayout {
    double imd = 750.0;
    int rows = 5;
    int cols = 5;
};

/// One sampled realization. Treated as immutable once built.
struct UrbanEnvironment {
    std::vector<Vec3> mbs_sites;
    std::vector<Vec3> uam_nodes;
    std::vector<Building> buildings;
    double window_half_width = 0.0;

    friend bool operator==(const UrbanEnvironment&, const UrbanEnvironment&) = default;
};

UrbanEnvironment sample_environment(const SpatialParams& params, std::uint64_t seed);
UrbanEnvironment grid_environment(const GridLayout& layout, const SpatialParams& params, std::uint64_t seed);

/// Site positions of a hexagonal grid, centered on the origin.
std::vector<Vec3> hex_grid_sites(const GridLayout& layout, double h_M);

/// MBS density (per km^2) equivalent to a hexagonal grid with spacing imd (m).
double hex_grid_density_per_km2(double imd);

/// Buildings as a marked PPP over the window (Rayleigh heights).
std::vector<Building> sample_buildings(const SpatialParams& params, std::uint64_t seed);

/// Removes buildings whose closed volume contains any of the points.
void clear_buildings_around(std::vector<Building>& buildings, const std::vector<Vec3>& points);

bool inside_volume(const Vec3& p, const Building& b);
bool inside_footprint(double x, double y, const Building& b);

/// Uniform UAM position in [-half, half]^2 x [h_min, h_max] outside every building volume.
/// Throws std::runtime_error after max_tries rejections.
Vec3 sample_uam_position(Rng& rng, const std::vector<Building>& buildings, double half_width,
                         double h_min, double h_max, int max_tries = 10000);

double link_2d_distance(const Vec3& a, const Vec3& b);
double link_3d_distance(const Vec3& a, const Vec3& b);
/// atan2(dy, dx) from a to b, in (-pi, pi]; 0 when the 2D positions coincide.
double link_azimuth(const Vec3& a, const Vec3& b);
/// atan((a.z - b.z) / r), positive when b is below a.
double link_elevation(const Vec3& a, const Vec3& b);

/// Line-oriented replay format: "mbs x y z", "uam x y z", "building x y h W D".
void write_environment(std::ostream& out, const UrbanEnvironment& env);
UrbanEnvironment read_environment(std::istream& in);

} // namespace uam
