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

#include "uam/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "uam/quadrature.hpp"
#include "uam/rng.hpp"
#include "uam/units.hpp"

namespace uam {

namespace {

double ratio_power(double x, int e) { return e == 1 ? std::abs(x) : x * x; }

} // namespace

std::vector<std::string> AntennaParams::violations() const
{
    std::vector<std::string> out;
    if (!(phi_3db > 0.0))
        out.emplace_back("antenna.phi_3db must be > 0");
    if (!(theta_3db > 0.0))
        out.emplace_back("antenna.theta_3db must be > 0");
    if (!(sla_v > 0.0))
        out.emplace_back("antenna.sla_v must be > 0");
    if (!(a_m > 0.0))
        out.emplace_back("antenna.a_m must be > 0");
    if (pattern_exponent != 1 && pattern_exponent != 2)
        out.emplace_back("antenna.pattern_exponent must be 1 or 2");
    return out;
}

double vertical_gain(double phi_deg, double tilt_deg, const AntennaParams& p)
{
    return -std::min(12.0 * ratio_power((phi_deg - tilt_deg) / p.phi_3db, p.pattern_exponent), p.sla_v);
}

double horizontal_gain(double theta_deg, const AntennaParams& p)
{
    return -std::min(12.0 * ratio_power(theta_deg / p.theta_3db, p.pattern_exponent), p.a_m);
}

double element_gain(double phi_deg, double tilt_deg, double theta_deg, const AntennaParams& p)
{
    const double v = vertical_gain(phi_deg, tilt_deg, p);
    const double h = horizontal_gain(theta_deg, p);
    return -std::min(-(v + h), p.a_m);
}

double beam_gain(double theta_deg, int n, int n_beam, double a_m, int exponent)
{
    if (n < 1 || n > n_beam)
        throw std::invalid_argument("beam_gain: beam index out of range");
    const double w = beam_half_width_deg(n_beam);
    const double x = (theta_deg + 60.0 + w - 2.0 * n * w) / (1.083 * w);
    return -std::min(12.0 * ratio_power(x, exponent), a_m);
}

std::vector<std::string> BeamPlanSpec::violations() const
{
    std::vector<std::string> out;
    if (sectors < 1)
        out.emplace_back("beams.sectors must be >= 1");
    if (n_beam < 1)
        out.emplace_back("beams.n_beam must be >= 1");
    if (delta < 1)
        out.emplace_back("beams.delta must be >= 1");
    if (omni && (n_beam != 1 || delta != 1 || multi_layer))
        out.emplace_back("beams.omni requires n_beam = 1, delta = 1 and multi_layer off");
    if (!(tilt_deg >= -90.0 && tilt_deg <= 90.0))
        out.emplace_back("beams.tilt_deg must be in [-90, 90]");
    if (!(tilt_down_deg >= -90.0 && tilt_down_deg <= 90.0))
        out.emplace_back("beams.tilt_down_deg must be in [-90, 90]");
    return out;
}

BeamPlan assign_reuse_colors(const BeamPlanSpec& spec, std::size_t n_sites, Coloring coloring, std::uint64_t seed)
{
    if (auto v = spec.violations(); !v.empty())
        throw std::invalid_argument(v.front());
    BeamPlan plan;
    plan.spec = spec;
    plan.site_first.reserve(n_sites + 1);
    const int N = spec.n_beam;
    const Rng base(seed);
    std::vector<int> perm(static_cast<std::size_t>(N));
    for (std::size_t s = 0; s < n_sites; ++s) {
        plan.site_first.push_back(plan.tx.size());
        if (spec.omni) {
            plan.tx.push_back(Transmitter{s, 0, 0, Layer::Single, 0.0, 0.0, 0, 1});
            continue;
        }
        Rng rng = base.split(s);
        const int offset = coloring == Coloring::Random ? static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.delta))) : 0;
        for (int k = 0; k < spec.sectors; ++k) {
            const double boresight = wrap_deg(spec.sector_offset_deg + k * 360.0 / spec.sectors);
            const int group = (k + offset) % spec.delta;
            std::iota(perm.begin(), perm.end(), 0);
            if (coloring == Coloring::Random)
                std::shuffle(perm.begin(), perm.end(), rng);
            const Layer upper = spec.multi_layer ? Layer::Up : Layer::Single;
            if (N == 1) {
                plan.tx.push_back(Transmitter{s, k, 0, upper, boresight, spec.tilt_deg, group, group + 1});
            } else {
                for (int n = 1; n <= N; ++n) {
                    const int c = group * N + perm[static_cast<std::size_t>(n - 1)];
                    plan.tx.push_back(Transmitter{s, k, n, upper, boresight, spec.tilt_deg, c, c + 1});
                }
            }
            if (spec.multi_layer)
                plan.tx.push_back(
                    Transmitter{s, k, 0, Layer::Down, boresight, spec.tilt_down_deg, group * N, (group + 1) * N});
        }
    }
    plan.site_first.push_back(plan.tx.size());
    return plan;
}

double transmitter_gain(const Transmitter& t, const Vec3& site, const Vec3& uam, const BeamPlan& plan,
                        const AntennaParams& params)
{
    if (plan.spec.omni)
        return 0.0;
    const double phi = rad_to_deg(link_elevation(site, uam));
    const double theta = wrap_deg(rad_to_deg(link_azimuth(site, uam)) - t.boresight_deg);
    if (t.beam == 0)
        return element_gain(phi, t.tilt_deg, theta, params);
    const double v = vertical_gain(phi, t.tilt_deg, params);
    const double h = beam_gain(theta, t.beam, plan.spec.n_beam, params.a_m, params.pattern_exponent);
    return -std::min(-(v + h), params.a_m);
}

std::pair<std::size_t, double> best_beam(std::size_t site, const Vec3& site_pos, const Vec3& uam, Layer layer,
                                         const BeamPlan& plan, const AntennaParams& params)
{
    const bool want_down = layer == Layer::Down;
    std::size_t best = plan.site_first.at(site + 1);
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = plan.site_first[site]; i < plan.site_first[site + 1]; ++i) {
        const Transmitter& t = plan.tx[i];
        if ((t.layer == Layer::Down) != want_down)
            continue;
        const double g = transmitter_gain(t, site_pos, uam, plan, params);
        if (g > best_gain) {
            best_gain = g;
            best = i;
        }
    }
    if (best == plan.site_first[site + 1])
        throw std::invalid_argument("best_beam: site has no transmitter on the requested layer");
    return {best, best_gain};
}

double tilt_objective(double tilt_deg, double h_U, const TiltSearch& search, const AntennaParams& params)
{
    const double dh = search.h_M - h_U;
    const double theta_max = params.theta_3db;
    const bool linear = search.objective == TiltObjective::Linear;
    auto over_theta = [&](double r) {
        const double phi = rad_to_deg(std::atan2(dh, r));
        return integrate_fixed(
            [&](double theta) {
                const double g = element_gain(phi, tilt_deg, theta, params);
                return linear ? db_to_linear(g) : g;
            },
            -theta_max, theta_max, 8, search.theta_panels);
    };
    return integrate_fixed(over_theta, 0.0, 0.5 * search.imd, 8, search.r_panels);
}

double optimal_tilt(double h_U, const TiltSearch& search, const AntennaParams& params)
{
    if (!(search.step_deg > 0.0))
        throw std::invalid_argument("optimal_tilt: step must be > 0");
    const int half = static_cast<int>(std::floor(90.0 / search.step_deg + 1e-9));
    double best_tilt = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    // Visit 0, +s, -s, +2s, ... so a strict comparison keeps the smaller |tilt| on ties.
    for (int k = 0; k <= 2 * half; ++k) {
        const int j = (k + 1) / 2 * (k % 2 == 1 ? 1 : -1);
        const double tilt = j * search.step_deg;
        const double obj = tilt_objective(tilt, h_U, search, params);
        if (obj > best) {
            best = obj;
            best_tilt = tilt;
        }
    }
    return best_tilt;
}

} // namespace uam
