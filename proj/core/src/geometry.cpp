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

#include "uam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "uam/units.hpp"

namespace uam {

std::vector<std::string> SpatialParams::violations() const
{
    std::vector<std::string> out;
    auto require = [&out](bool ok, const char* msg) {
        if (!ok)
            out.emplace_back(msg);
    };
    require(std::isfinite(lambda_M) && lambda_M > 0.0, "spatial.lambda_M must be > 0");
    require(std::isfinite(lambda_U) && lambda_U >= 0.0, "spatial.lambda_U must be >= 0");
    require(std::isfinite(lambda_B) && lambda_B >= 0.0, "spatial.lambda_B must be >= 0");
    require(std::isfinite(h_M) && h_M >= 0.0, "spatial.h_M must be >= 0");
    require(h_U_min >= 0.0 && h_U_min < h_U_max, "spatial: require 0 <= h_U_min < h_U_max");
    require(W > 0.0, "spatial.W must be > 0");
    require(D > 0.0, "spatial.D must be > 0");
    require(sigma_hB > 0.0, "spatial.sigma_hB must be > 0");
    require(std::isfinite(window_half_width) && window_half_width > 0.0,
            "spatial.window_half_width must be > 0");
    return out;
}

void SpatialParams::validate() const
{
    const auto errs = violations();
    if (errs.empty())
        return;
    std::string msg = "invalid SpatialParams:";
    for (const auto& e : errs)
        msg += "\n  - " + e;
    throw std::invalid_argument(msg);
}

double SpatialParams::window_area_km2() const
{
    const double side_km = 2.0 * window_half_width * 1e-3;
    return side_km * side_km;
}

double hex_grid_density_per_km2(double imd)
{
    const double imd_km = imd * 1e-3;
    return 2.0 / (std::sqrt(3.0) * imd_km * imd_km);
}

std::vector<Vec3> hex_grid_sites(const GridLayout& layout, double h_M)
{
    if (!(layout.imd > 0.0))
        throw std::invalid_argument("grid layout: imd must be > 0");
    if (layout.rows < 1 || layout.cols < 1)
        throw std::invalid_argument("grid layout: rows and cols must be >= 1");

    std::vector<Vec3> sites;
    sites.reserve(static_cast<std::size_t>(layout.rows) * static_cast<std::size_t>(layout.cols));
    const double row_pitch = layout.imd * std::sqrt(3.0) / 2.0;
    double sx = 0.0;
    double sy = 0.0;
    for (int r = 0; r < layout.rows; ++r) {
        const double shift = (r % 2 == 1) ? 0.5 * layout.imd : 0.0;
        for (int c = 0; c < layout.cols; ++c) {
            Vec3 p{c * layout.imd + shift, r * row_pitch, h_M};
            sx += p.x;
            sy += p.y;
            sites.push_back(p);
        }
    }
    const double n = static_cast<double>(sites.size());
    for (auto& p : sites) {
        p.x -= sx / n;
        p.y -= sy / n;
    }
    return sites;
}

std::vector<Building> sample_buildings(const SpatialParams& params, std::uint64_t seed)
{
    Rng rng(seed);
    const double hw = params.window_half_width;
    const auto n = rng.poisson(params.lambda_B * params.window_area_km2());
    std::vector<Building> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        Building b;
        b.center.x = rng.uniform(-hw, hw);
        b.center.y = rng.uniform(-hw, hw);
        b.center.z = rng.rayleigh(params.sigma_hB);
        b.W = params.W;
        b.D = params.D;
        out.push_back(b);
    }
    return out;
}

bool inside_footprint(double x, double y, const Building& b)
{
    return x >= b.x_min() && x <= b.x_max() && y >= b.y_min() && y <= b.y_max();
}

bool inside_volume(const Vec3& p, const Building& b)
{
    return p.z <= b.height() && inside_footprint(p.x, p.y, b);
}

void clear_buildings_around(std::vector<Building>& buildings, const std::vector<Vec3>& points)
{
    if (buildings.empty() || points.empty())
        return;
    // Points are bucketed on a grid at least as wide as any footprint, so a
    // footprint only overlaps its own cell and the eight neighbours.
    double cell = 1.0;
    for (const auto& b : buildings)
        cell = std::max({cell, b.W, b.D});
    double x0 = points.front().x, y0 = points.front().y, x1 = x0, y1 = y0;
    for (const auto& p : points) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    const auto nx = static_cast<std::int64_t>((x1 - x0) / cell) + 1;
    const auto ny = static_cast<std::int64_t>((y1 - y0) / cell) + 1;
    // CSR buckets: offsets[c] .. offsets[c + 1] index into order.
    std::vector<std::size_t> offsets(static_cast<std::size_t>(nx * ny) + 1, 0);
    std::vector<std::size_t> cell_of(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto i = std::min(nx - 1, static_cast<std::int64_t>((points[k].x - x0) / cell));
        const auto j = std::min(ny - 1, static_cast<std::int64_t>((points[k].y - y0) / cell));
        cell_of[k] = static_cast<std::size_t>(i * ny + j);
        ++offsets[cell_of[k] + 1];
    }
    for (std::size_t c = 1; c < offsets.size(); ++c)
        offsets[c] += offsets[c - 1];
    std::vector<std::size_t> order(points.size());
    auto fill = offsets;
    for (std::size_t k = 0; k < points.size(); ++k)
        order[fill[cell_of[k]]++] = k;

    std::erase_if(buildings, [&](const Building& b) {
        const auto ci = static_cast<std::int64_t>(std::floor((b.center.x - x0) / cell));
        const auto cj = static_cast<std::int64_t>(std::floor((b.center.y - y0) / cell));
        for (auto i = std::max<std::int64_t>(ci - 1, 0); i <= std::min(ci + 1, nx - 1); ++i)
            for (auto j = std::max<std::int64_t>(cj - 1, 0); j <= std::min(cj + 1, ny - 1); ++j) {
                const auto c = static_cast<std::size_t>(i * ny + j);
                for (auto o = offsets[c]; o < offsets[c + 1]; ++o)
                    if (inside_volume(points[order[o]], b))
                        return true;
            }
        return false;
    });
}

Vec3 sample_uam_position(Rng& rng, const std::vector<Building>& buildings, double half_width, double h_min,
                         double h_max, int max_tries)
{
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Vec3 p{rng.uniform(-half_width, half_width), rng.uniform(-half_width, half_width),
               rng.uniform(h_min, h_max)};
        bool blocked = false;
        for (const auto& b : buildings) {
            if (inside_volume(p, b)) {
                blocked = true;
                break;
            }
        }
        if (!blocked)
            return p;
    }
    throw std::runtime_error("sample_uam_position: no free position after max_tries attempts");
}

namespace {

UrbanEnvironment populate(std::vector<Vec3> sites, const SpatialParams& params, std::uint64_t seed)
{
    UrbanEnvironment env;
    env.window_half_width = params.window_half_width;
    env.mbs_sites = std::move(sites);
    env.buildings = sample_buildings(params, derive_seed(seed, {2}));
    if (params.clear_mbs_sites)
        clear_buildings_around(env.buildings, env.mbs_sites);

    Rng rng(derive_seed(seed, {3}));
    const auto n_uam = rng.poisson(params.lambda_U * params.window_area_km2());
    env.uam_nodes.reserve(n_uam);
    for (std::uint64_t i = 0; i < n_uam; ++i)
        env.uam_nodes.push_back(sample_uam_position(rng, env.buildings, params.window_half_width, params.h_U_min,
                                                    params.h_U_max));
    return env;
}

} // namespace

UrbanEnvironment sample_environment(const SpatialParams& params, std::uint64_t seed)
{
    params.validate();
    Rng rng(derive_seed(seed, {1}));
    const double hw = params.window_half_width;
    const auto n_mbs = rng.poisson(params.lambda_M * params.window_area_km2());
    std::vector<Vec3> sites;
    sites.reserve(n_mbs);
    for (std::uint64_t i = 0; i < n_mbs; ++i)
        sites.push_back({rng.uniform(-hw, hw), rng.uniform(-hw, hw), params.h_M});
    return populate(std::move(sites), params, seed);
}

UrbanEnvironment grid_environment(const GridLayout& layout, const SpatialParams& params, std::uint64_t seed)
{
    params.validate();
    return populate(hex_grid_sites(layout, params.h_M), params, seed);
}

double link_2d_distance(const Vec3& a, const Vec3& b)
{
    return std::hypot(b.x - a.x, b.y - a.y);
}

double link_3d_distance(const Vec3& a, const Vec3& b)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double dz = b.z - a.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double link_azimuth(const Vec3& a, const Vec3& b)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    if (dx == 0.0 && dy == 0.0)
        return 0.0;
    const double az = std::atan2(dy, dx);
    // atan2 yields -pi for (negative x, -0.0 y); map it to +pi.
    return az == -kPi ? kPi : az;
}

double link_elevation(const Vec3& a, const Vec3& b)
{
    return std::atan2(a.z - b.z, link_2d_distance(a, b));
}

void write_environment(std::ostream& out, const UrbanEnvironment& env)
{
    const auto old_prec = out.precision(17);
    out << "# uamnet environment v1\n";
    out << "window " << env.window_half_width << '\n';
    for (const auto& p : env.mbs_sites)
        out << "mbs " << p.x << ' ' << p.y << ' ' << p.z << '\n';
    for (const auto& p : env.uam_nodes)
        out << "uam " << p.x << ' ' << p.y << ' ' << p.z << '\n';
    for (const auto& b : env.buildings)
        out << "building " << b.center.x << ' ' << b.center.y << ' ' << b.center.z << ' ' << b.W << ' ' << b.D
            << '\n';
    out.precision(old_prec);
}

UrbanEnvironment read_environment(std::istream& in)
{
    UrbanEnvironment env;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        auto fail = [&] {
            return std::runtime_error("environment line " + std::to_string(lineno) + ": malformed '" + line + "'");
        };
        if (kind == "window") {
            if (!(ls >> env.window_half_width))
                throw fail();
        } else if (kind == "mbs" || kind == "uam") {
            Vec3 p;
            if (!(ls >> p.x >> p.y >> p.z))
                throw fail();
            (kind == "mbs" ? env.mbs_sites : env.uam_nodes).push_back(p);
        } else if (kind == "building") {
            Building b;
            if (!(ls >> b.center.x >> b.center.y >> b.center.z >> b.W >> b.D))
                throw fail();
            env.buildings.push_back(b);
        } else {
            throw std::runtime_error("environment line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
        }
    }
    return env;
}

} // namespace uam
