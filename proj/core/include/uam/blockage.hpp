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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uam/geometry.hpp"

namespace uam {

/// Scale factor of the per-building penetration loss, in [0, 1].
/// gamma = 0 makes buildings opaque.
struct PenetrationParams {
    double gamma = 0.0;
};

struct BlockageOutcome {
    std::size_t n_blockers = 0;
    double loss_linear = 1.0;
};

/// 2D distances from the MBS (along the link) where the link is over a footprint.
struct LinkInterval {
    double enter = 0.0;
    double exit = 0.0;
};

/// Vertical condition: the link height at r_BM (2D distance from the MBS) is at or
/// below the roof h_B. Throws std::invalid_argument if r_BM is outside [0, r_UM].
bool vertical_blocks(const Vec3& mbs, const Vec3& uam, double r_BM, double h_B);

/// Angular part of the horizontal condition: the link azimuth lies between the
/// smallest and largest azimuths from the MBS to the footprint corners.
/// An MBS inside the footprint always satisfies it.
bool horizontal_angle_condition(const Vec3& mbs, const Vec3& uam, double cx, double cy, double W, double D);

/// Portion of the 2D link that lies over the closed footprint, clipped to [0, r_UM].
std::optional<LinkInterval> footprint_crossing(const Vec3& mbs, const Vec3& uam, double cx, double cy, double W,
                                               double D);

/// Horizontal condition: angle condition and the footprint is reached within r_UM.
bool horizontal_blocks(const Vec3& mbs, const Vec3& uam, double cx, double cy, double W, double D);

/// Both conditions. The vertical test is evaluated where the link crosses the
/// footprint closest to its lower endpoint. Zero-length 2D links never block.
bool building_blocks(const Vec3& mbs, const Vec3& uam, const Building& b);

std::size_t count_blockers(const Vec3& mbs, const Vec3& uam, std::span<const Building> buildings);
inline std::size_t count_blockers(const Vec3& mbs, const Vec3& uam, const UrbanEnvironment& env)
{
    return count_blockers(mbs, uam, env.buildings);
}

/// Buildings satisfying only the horizontal condition.
std::size_t count_horizontal_blockers(const Vec3& mbs, const Vec3& uam, std::span<const Building> buildings);

/// Independent reference: closed box [footprint] x [0, h_B] against the open 3D
/// segment mbs->uam, by slab clipping.
bool oracle_segment_hits_box(const Vec3& p0, const Vec3& p1, const Building& b);
std::size_t oracle_count_blockers(const Vec3& mbs, const Vec3& uam, std::span<const Building> buildings);
inline std::size_t oracle_count_blockers(const Vec3& mbs, const Vec3& uam, const UrbanEnvironment& env)
{
    return oracle_count_blockers(mbs, uam, env.buildings);
}

/// gamma^n.
double penetration_loss(std::size_t n_blockers, const PenetrationParams& params);

/// Uniform-grid bucketing of building centers; answers the same questions as the
/// linear scans above while touching only buildings near the link.
class BlockageIndex {
public:
    BlockageIndex() = default;
    explicit BlockageIndex(std::span<const Building> buildings, double cell_size = 0.0);

    [[nodiscard]] std::size_t count(const Vec3& mbs, const Vec3& uam) const;
    [[nodiscard]] std::size_t count_horizontal(const Vec3& mbs, const Vec3& uam) const;
    [[nodiscard]] BlockageOutcome evaluate(const Vec3& mbs, const Vec3& uam, const PenetrationParams& pen) const;

    /// Calls fn(building index) for every building whose footprint might reach the link.
    void for_each_candidate(const Vec3& a, const Vec3& b, const std::function<void(std::size_t)>& fn) const;

    [[nodiscard]] std::size_t size() const { return buildings_.size(); }

private:
    template <class Fn>
    void visit(const Vec3& a, const Vec3& b, Fn&& fn) const;

    std::vector<Building> buildings_;
    std::vector<std::uint32_t> cell_start_;
    std::vector<std::uint32_t> cell_items_;
    double x0_ = 0.0;
    double y0_ = 0.0;
    double cell_ = 1.0;
    int nx_ = 0;
    int ny_ = 0;
    double half_w_ = 0.0;
    double half_d_ = 0.0;
};

struct BlockageAuditRow {
    std::size_t link_id = 0;
    std::size_t n_condition = 0;
    std::size_t n_oracle = 0;
    [[nodiscard]] bool mismatch() const { return n_condition != n_oracle; }
};

/// Condition-based count vs. oracle for each (mbs, uam) pair.
std::vector<BlockageAuditRow> audit_blockage(std::span<const std::pair<Vec3, Vec3>> links,
                                             std::span<const Building> buildings);

} // namespace uam
