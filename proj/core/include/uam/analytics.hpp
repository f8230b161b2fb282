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

#include <optional>
#include <string>
#include <vector>

#include "uam/antenna.hpp"
#include "uam/channel.hpp"
#include "uam/geometry.hpp"
#include "uam/quadrature.hpp"

namespace uam {

/// Traffic and spectrum. Reuse factor and beam count come from BeamPlanSpec.
struct CapacityParams {
    double bandwidth_hz = 20e6;
    double tau_R_bits = 1000.0;
    double t_R_s = 0.1;
    double n_u_sector = 1.0;

    [[nodiscard]] std::vector<std::string> violations() const;
    /// Target rate tau_R / t_R in bits/s.
    [[nodiscard]] double target_rate() const { return tau_R_bits / t_R_s; }
};

/// Everything the analytic evaluators read.
struct AnalyticModel {
    SpatialParams spatial;
    ChannelParams channel;
    AntennaParams antenna;
    BeamPlanSpec beams;
    QuadratureSpec quad;
    /// Gauss-Legendre nodes per panel and panels over the UAM height range.
    int h_nodes = 8;
    int h_panels = 6;
    /// Azimuth nodes used to average a beam's gain over its coverage arc.
    int gain_nodes = 8;
    unsigned workers = 0;
};

/// Probability that a building straddling the link at a uniform position is tall
/// enough to cut it. Independent of r_UM because the link height is linear in r_BM.
double vertical_block_probability(double r_UM, double h_U, const SpatialParams& spatial);

/// Expected number of building centers in the blockage region at azimuth theta (rad).
double mean_horizontal_blockers_at_angle(double r_UM, double theta, const SpatialParams& spatial);
/// Azimuth-averaged version: 2 lambda_B (W + D) r / pi + lambda_B W D.
double mean_horizontal_blockers(double r_UM, const SpatialParams& spatial);
/// P_V * E[N_A].
double mean_blockers_3d(double r_UM, double h_U, const SpatialParams& spatial);
/// gamma^E[N_BP]; 1 when gamma = 1.
double expected_penetration_loss(double r_UM, double h_U, const SpatialParams& spatial, const ChannelParams& channel);
/// exp(-E[N_BP]): probability that an opaque-building link is unobstructed.
double visibility_probability(double r_UM, double h_U, const SpatialParams& spatial);

/// Laplace transform of the normalized interference seen by a UAM at height h_U
/// served from 2D distance r_UM, and its derivatives in s up to `order`.
/// result[k] = d^k L / ds^k. Interferer density is lambda_M / (delta n_beam)
/// unless the model is omni.
std::vector<double> interference_laplace(double s, double r_UM, double h_U, const AnalyticModel& model, int order = 0);

/// P(SIR > T | serving distance r_UM, height h_U), averaged over the serving
/// azimuth inside the beam.
double conditional_coverage(double T, double r_UM, double h_U, const AnalyticModel& model);

/// Coverage at one height, integrated over the serving distance.
QuadResult coverage_at_height(double T, double h_U, const AnalyticModel& model);

/// Omni antennas, full reuse: the beam settings of the model are ignored.
QuadResult coverage_probability(double T, const AnalyticModel& model);
/// Antenna gains and reuse thinning taken from model.beams.
QuadResult coverage_with_reuse(double T, const AnalyticModel& model);

/// Bandwidth available to one UAM: BW / (delta n_beam n_u_sector).
double bandwidth_share(const AnalyticModel& model, const CapacityParams& capacity);
/// SIR a UAM needs to deliver tau_R within t_R on its bandwidth share.
double required_sir(const AnalyticModel& model, const CapacityParams& capacity);

/// Mean rate in bits/s: bandwidth share times E[ln(1 + SIR)].
double achievable_rate(const AnalyticModel& model, const CapacityParams& capacity);
/// P(rate * t_R >= tau_R).
double reliability(const AnalyticModel& model, const CapacityParams& capacity);

/// SIR threshold (linear) at which coverage equals R; empty outside [P_c(60 dB), P_c(-60 dB)].
std::optional<double> inverse_coverage(double R, const AnalyticModel& model);

struct Supportable {
    bool feasible = false;
    double uams_per_sector = 0.0;
    double threshold_linear = 0.0;
};
/// UAMs per sector sustaining reliability R: (BW / (delta n_beam)) ln(1 + P_c^-1(R)) / (tau_R / t_R).
Supportable supportable_uams(double R, const AnalyticModel& model, const CapacityParams& capacity);

} // namespace uam
