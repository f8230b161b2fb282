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

#include "uam/blockage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uam/units.hpp"

namespace uam {

bool vertical_blocks(const Vec3& mbs, const Vec3& uam, double r_BM, double h_B)
{
    const double r_UM = link_2d_distance(mbs, uam);
    if (!(r_BM >= 0.0 && r_BM <= r_UM))
        throw std::invalid_argument("vertical_blocks: building is not between the link endpoints");

    const double h_M = mbs.z;
    const double h_U = uam.z;
    double h_BP = h_M;
    if (r_UM > 0.0) {
        if (h_M < h_U)
            h_BP = r_BM * (h_U - h_M) / r_UM + h_M;
        else if (h_M > h_U)
            h_BP = (r_UM - r_BM) * (h_M - h_U) / r_UM + h_U;
    }
    return h_BP <= h_B;
}

bool horizontal_angle_condition(const Vec3& mbs, const Vec3& uam, double cx, double cy, double W, double D)
{
    const double hx = 0.5 * W;
    const double hy = 0.5 * D;
    if (mbs.x >= cx - hx && mbs.x <= cx + hx && mbs.y >= cy - hy && mbs.y <= cy + hy)
        return true;

    const double theta_um = link_azimuth(mbs, uam);
    // Corner azimuths are measured relative to the direction of the building
    // center; an exterior point sees the footprint under less than pi, so the
    // extreme corners are the min/max of these offsets.
    const double ref = std::atan2(cy - mbs.y, cx - mbs.x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const double xs[2] = {cx - hx, cx + hx};
    const double ys[2] = {cy - hy, cy + hy};
    for (double x : xs) {
        for (double y : ys) {
            const double off = wrap_rad(std::atan2(y - mbs.y, x - mbs.x) - ref);
            lo = std::min(lo, off);
            hi = std::max(hi, off);
        }
    }
    const double t = wrap_rad(theta_um - ref);
    return t >= lo && t <= hi;
}

std::optional<LinkInterval> footprint_crossing(const Vec3& mbs, const Vec3& uam, double cx, double cy, double W,
                                               double D)
{
    const double r = link_2d_distance(mbs, uam);
    const double d[2] = {uam.x - mbs.x, uam.y - mbs.y};
    const double p[2] = {mbs.x, mbs.y};
    const double lo[2] = {cx - 0.5 * W, cy - 0.5 * D};
    const double hi[2] = {cx + 0.5 * W, cy + 0.5 * D};
    double t0 = 0.0;
    double t1 = 1.0;
    for (int k = 0; k < 2; ++k) {
        if (d[k] == 0.0) {
            if (p[k] < lo[k] || p[k] > hi[k])
                return std::nullopt;
            continue;
        }
        double a = (lo[k] - p[k]) / d[k];
        double b = (hi[k] - p[k]) / d[k];
        if (a > b)
            std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
        if (t0 > t1)
            return std::nullopt;
    }
    return LinkInterval{t0 * r, t1 * r};
}

bool horizontal_blocks(const Vec3& mbs, const Vec3& uam, double cx, double cy, double W, double D)
{
    // Both conditions must hold; the slab test is far cheaper, so it goes first.
    if (!footprint_crossing(mbs, uam, cx, cy, W, D))
        return false;
    return horizontal_angle_condition(mbs, uam, cx, cy, W, D);
}

bool building_blocks(const Vec3& mbs, const Vec3& uam, const Building& b)
{
    const double r = link_2d_distance(mbs, uam);
    if (r == 0.0)
        return false;
    const auto cross = footprint_crossing(mbs, uam, b.center.x, b.center.y, b.W, b.D);
    if (!cross || !horizontal_angle_condition(mbs, uam, b.center.x, b.center.y, b.W, b.D))
        return false;
    // The link height is linear in distance, so its minimum over the crossing
    // is at the end nearer the lower endpoint.
    const double r_near = uam.z >= mbs.z ? cross->enter : cross->exit;
    return vertical_blocks(mbs, uam, std::clamp(r_near, 0.0, r), b.height());
}

std::size_t count_blockers(const Vec3& mbs, const Vec3& uam, std::span<const Building> buildings)
{
    if (link_2d_distance(mbs, uam) == 0.0)
        return 0;
    std::size_t n = 0;
    for (const auto& b : buildings)
        n += building_blocks(mbs, uam, b) ? 1 : 0;
    return n;
}

std::size_t count_horizontal_blockers(const Vec3& mbs, const Vec3& uam, std::span<const Building> buildings)
{
    if (link_2d_distance(mbs, uam) == 0.0)
        return 0;
    std::size_t n = 0;
    for (const auto& b : buildings)
        n += horizontal_blocks(mbs, uam, b.center.x, b.center.y, b.W, b.D) ? 1 : 0;
    return n;
}

bool oracle_segment_hits_box(const Vec3& p0, const Vec3& p1, const Building& b)
{
    const double o[3] = {p0.x, p0.y, p0.z};
    const double dir[3] = {p1.x - p0.x, p1.y - p0.y, p1.z - p0.z};
    const double bmin[3] = {b.x_min(), b.y_min(), 0.0};
    const double bmax[3] = {b.x_max(), b.y_max(), b.height()};

    double tmin = -std::numeric_limits<double>::infinity();
    double tmax = std::numeric_limits<double>::infinity();
    for (int axis = 0; axis < 3; ++axis) {
        if (dir[axis] == 0.0) {
            if (o[axis] < bmin[axis] || o[axis] > bmax[axis])
                return false;
            continue;
        }
        const double inv = 1.0 / dir[axis];
        double ta = (bmin[axis] - o[axis]) * inv;
        double tb = (bmax[axis] - o[axis]) * inv;
        if (ta > tb)
            std::swap(ta, tb);
        tmin = std::max(tmin, ta);
        tmax = std::min(tmax, tb);
    }
    // Closed box, open segment (0, 1).
    return tmin <= tmax && tmax > 0.0 && tmin < 1.0;
}

std::size_t oracle_count_blockers(const Vec3& mbs, const Vec3& uam, std::span<const Building> buildings)
{
    std::size_t n = 0;
    for (const auto& b : buildings)
        n += oracle_segment_hits_box(mbs, uam, b) ? 1 : 0;
    return n;
}

double penetration_loss(std::size_t n_blockers, const PenetrationParams& params)
{
    if (n_blockers == 0)
        return 1.0;
    return std::pow(params.gamma, static_cast<double>(n_blockers));
}

BlockageIndex::BlockageIndex(std::span<const Building> buildings, double cell_size)
    : buildings_(buildings.begin(), buildings.end())
{
    if (buildings_.empty()) {
        nx_ = ny_ = 0;
        return;
    }
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = xmin;
    double xmax = -xmin;
    double ymax = -xmin;
    for (const auto& b : buildings_) {
        xmin = std::min(xmin, b.center.x);
        xmax = std::max(xmax, b.center.x);
        ymin = std::min(ymin, b.center.y);
        ymax = std::max(ymax, b.center.y);
        half_w_ = std::max(half_w_, 0.5 * b.W);
        half_d_ = std::max(half_d_, 0.5 * b.D);
    }
    cell_ = cell_size > 0.0 ? cell_size : std::max({2.0 * half_w_, 2.0 * half_d_, 25.0});
    x0_ = xmin;
    y0_ = ymin;
    nx_ = static_cast<int>(std::floor((xmax - xmin) / cell_)) + 1;
    ny_ = static_cast<int>(std::floor((ymax - ymin) / cell_)) + 1;

    const std::size_t ncell = static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
    std::vector<std::uint32_t> counts(ncell + 1, 0);
    std::vector<std::uint32_t> cell_of(buildings_.size());
    for (std::size_t i = 0; i < buildings_.size(); ++i) {
        const int ix = std::min(nx_ - 1, static_cast<int>((buildings_[i].center.x - x0_) / cell_));
        const int iy = std::min(ny_ - 1, static_cast<int>((buildings_[i].center.y - y0_) / cell_));
        cell_of[i] = static_cast<std::uint32_t>(iy * nx_ + ix);
        ++counts[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c <= ncell; ++c)
        counts[c] += counts[c - 1];
    cell_start_ = counts;
    cell_items_.resize(buildings_.size());
    for (std::size_t i = 0; i < buildings_.size(); ++i)
        cell_items_[counts[cell_of[i]]++] = static_cast<std::uint32_t>(i);
}

template <class Fn>
void BlockageIndex::visit(const Vec3& a, const Vec3& b, Fn&& fn) const
{
    if (nx_ == 0)
        return;
    const double sx0 = std::min(a.x, b.x);
    const double sx1 = std::max(a.x, b.x);
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;

    auto clamp_x = [this](double x) { return std::clamp(static_cast<int>(std::floor((x - x0_) / cell_)), 0, nx_ - 1); };
    auto clamp_y = [this](double y) { return std::clamp(static_cast<int>(std::floor((y - y0_) / cell_)), 0, ny_ - 1); };

    // Centers in column i lie in [x0 + i*cell, x0 + (i+1)*cell).
    const double cx_lo = sx0 - half_w_;
    const double cx_hi = sx1 + half_w_;
    if (cx_hi < x0_ || cx_lo > x0_ + nx_ * cell_)
        return;
    const int i0 = clamp_x(cx_lo);
    const int i1 = clamp_x(cx_hi);
    for (int i = i0; i <= i1; ++i) {
        const double col_lo = x0_ + i * cell_;
        const double col_hi = col_lo + cell_;
        const double xa = std::max(sx0, col_lo - half_w_);
        const double xb = std::min(sx1, col_hi + half_w_);
        if (xa > xb)
            continue;
        double ya;
        double yb;
        if (dx == 0.0) {
            ya = std::min(a.y, b.y);
            yb = std::max(a.y, b.y);
        } else {
            const double y_at_a = a.y + (xa - a.x) * dy / dx;
            const double y_at_b = a.y + (xb - a.x) * dy / dx;
            ya = std::min(y_at_a, y_at_b);
            yb = std::max(y_at_a, y_at_b);
        }
        ya -= half_d_;
        yb += half_d_;
        if (yb < y0_ || ya > y0_ + ny_ * cell_)
            continue;
        const int j0 = clamp_y(ya);
        const int j1 = clamp_y(yb);
        for (int j = j0; j <= j1; ++j) {
            const std::size_t c = static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(i);
            for (std::uint32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k)
                fn(cell_items_[k]);
        }
    }
}

void BlockageIndex::for_each_candidate(const Vec3& a, const Vec3& b, const std::function<void(std::size_t)>& fn) const
{
    visit(a, b, [&fn](std::uint32_t i) { fn(i); });
}

std::size_t BlockageIndex::count(const Vec3& mbs, const Vec3& uam) const
{
    if (link_2d_distance(mbs, uam) == 0.0)
        return 0;
    std::size_t n = 0;
    visit(mbs, uam, [&](std::uint32_t i) { n += building_blocks(mbs, uam, buildings_[i]) ? 1 : 0; });
    return n;
}

std::size_t BlockageIndex::count_horizontal(const Vec3& mbs, const Vec3& uam) const
{
    if (link_2d_distance(mbs, uam) == 0.0)
        return 0;
    std::size_t n = 0;
    visit(mbs, uam, [&](std::uint32_t i) {
        const auto& b = buildings_[i];
        n += horizontal_blocks(mbs, uam, b.center.x, b.center.y, b.W, b.D) ? 1 : 0;
    });
    return n;
}

BlockageOutcome BlockageIndex::evaluate(const Vec3& mbs, const Vec3& uam, const PenetrationParams& pen) const
{
    BlockageOutcome out;
    out.n_blockers = count(mbs, uam);
    out.loss_linear = penetration_loss(out.n_blockers, pen);
    return out;
}

std::vector<BlockageAuditRow> audit_blockage(std::span<const std::pair<Vec3, Vec3>> links,
                                             std::span<const Building> buildings)
{
    std::vector<BlockageAuditRow> rows;
    rows.reserve(links.size());
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& [mbs, uam] = links[i];
        rows.push_back({i, count_blockers(mbs, uam, buildings), oracle_count_blockers(mbs, uam, buildings)});
    }
    return rows;
}

} // namespace uam
