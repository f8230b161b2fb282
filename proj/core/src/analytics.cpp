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

#include "uam/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uam/parallel.hpp"
#include "uam/units.hpp"

namespace uam {

std::vector<std::string> ChannelParams::violations() const
{
    std::vector<std::string> out;
    if (!(alpha > 2.0))
        out.emplace_back("channel.alpha must be > 2");
    if (m < 1)
        out.emplace_back("channel.m must be a positive integer");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        out.emplace_back("channel.gamma must be in [0, 1]");
    if (!std::isfinite(p_tx_dbm))
        out.emplace_back("channel.p_tx_dbm must be finite");
    return out;
}

std::vector<std::string> CapacityParams::violations() const
{
    std::vector<std::string> out;
    if (!(bandwidth_hz > 0.0))
        out.emplace_back("capacity.bandwidth_hz must be > 0");
    if (!(tau_R_bits > 0.0))
        out.emplace_back("capacity.tau_R_bits must be > 0");
    if (!(t_R_s > 0.0))
        out.emplace_back("capacity.t_R_s must be > 0");
    if (!(n_u_sector >= 1.0))
        out.emplace_back("capacity.n_u_sector must be >= 1");
    return out;
}

double vertical_block_probability(double r_UM, double h_U, const SpatialParams& spatial)
{
    if (r_UM < 0.0)
        throw std::invalid_argument("vertical_block_probability: r_UM must be >= 0");
    // Mean over u uniform between h_M and h_U of the Rayleigh CCDF exp(-u^2 / 2 sigma^2).
    const double s = spatial.sigma_hB;
    const double a = std::min(h_U, spatial.h_M);
    const double b = std::max(h_U, spatial.h_M);
    if (b - a <= 1e-9 * s) {
        const double u = 0.5 * (a + b);
        return std::exp(-u * u / (2.0 * s * s));
    }
    const double k = s * std::sqrt(2.0);
    return s * std::sqrt(kPi / 2.0) * (std::erf(b / k) - std::erf(a / k)) / (b - a);
}

double mean_horizontal_blockers_at_angle(double r_UM, double theta, const SpatialParams& spatial)
{
    const double lb = per_km2_to_per_m2(spatial.lambda_B);
    return lb * (r_UM * spatial.W * std::abs(std::sin(theta)) + r_UM * spatial.D * std::abs(std::cos(theta)) +
                 spatial.W * spatial.D);
}

double mean_horizontal_blockers(double r_UM, const SpatialParams& spatial)
{
    const double lb = per_km2_to_per_m2(spatial.lambda_B);
    return 2.0 * lb * (spatial.W + spatial.D) * r_UM / kPi + lb * spatial.W * spatial.D;
}

double mean_blockers_3d(double r_UM, double h_U, const SpatialParams& spatial)
{
    return vertical_block_probability(r_UM, h_U, spatial) * mean_horizontal_blockers(r_UM, spatial);
}

double expected_penetration_loss(double r_UM, double h_U, const SpatialParams& spatial, const ChannelParams& channel)
{
    if (channel.gamma >= 1.0)
        return 1.0;
    if (channel.gamma <= 0.0)
        return 0.0;
    return std::pow(channel.gamma, mean_blockers_3d(r_UM, h_U, spatial));
}

double visibility_probability(double r_UM, double h_U, const SpatialParams& spatial)
{
    return std::exp(-mean_blockers_3d(r_UM, h_U, spatial));
}

namespace {

/// Horizontal gains (dB) at azimuth nodes across one beam's coverage arc, with
/// weights summing to 1. A single 0 dB mark for omni antennas.
struct GainMarks {
    bool omni = true;
    std::vector<double> h_db;
    std::vector<double> weight;
};

GainMarks make_marks(const AnalyticModel& model, bool omni)
{
    GainMarks g;
    g.omni = omni;
    if (omni) {
        g.h_db = {0.0};
        g.weight = {1.0};
        return g;
    }
    const int N = model.beams.n_beam;
    const double w = beam_half_width_deg(N);
    const double c = beam_center_deg(1, N);
    const auto& rule = gauss_legendre(model.gain_nodes);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = c + w * rule.nodes[i];
        const double h = N == 1 ? horizontal_gain(theta, model.antenna)
                                : beam_gain(theta, 1, N, model.antenna.a_m, model.antenna.pattern_exponent);
        g.h_db.push_back(h);
        g.weight.push_back(0.5 * rule.weights[i]);
    }
    return g;
}

/// Per-height quantities shared by every distance.
struct HeightContext {
    const AnalyticModel* model = nullptr;
    GainMarks marks;
    double h_U = 0.0;
    double dh = 0.0;
    double lambda_serve = 0.0;  // per m^2
    double lambda_intf = 0.0;   // per m^2
    double r_max = 0.0;
    double p_v = 0.0;
    double c0 = 0.0;  // lambda_B W D
    double c1 = 0.0;  // 2 lambda_B (W + D) / pi
    bool opaque = true;

    [[nodiscard]] double n_bp(double t) const { return p_v * (c1 * t + c0); }
    /// Probability the link is unobstructed (opaque buildings), else 1.
    [[nodiscard]] double visible(double t) const { return opaque ? std::exp(-n_bp(t)) : 1.0; }
    /// Deterministic penetration loss (penetrable buildings), else 1.
    [[nodiscard]] double pen(double t) const
    {
        const double g = model->channel.gamma;
        return opaque || g >= 1.0 ? 1.0 : std::pow(g, n_bp(t));
    }
    [[nodiscard]] double vertical_db(double r) const
    {
        if (marks.omni)
            return 0.0;
        const double phi = rad_to_deg(std::atan2(dh, r));
        return vertical_gain(phi, model->beams.tilt_deg, model->antenna);
    }
    [[nodiscard]] double combined_linear(double v_db, double h_db) const
    {
        if (marks.omni)
            return 1.0;
        return db_to_linear(-std::min(-(v_db + h_db), model->antenna.a_m));
    }
};

HeightContext make_context(double h_U, const AnalyticModel& model, bool omni)
{
    HeightContext c;
    c.model = &model;
    c.marks = make_marks(model, omni);
    c.h_U = h_U;
    c.dh = h_U - model.spatial.h_M;
    c.lambda_serve = per_km2_to_per_m2(model.spatial.lambda_M);
    const double thin = omni ? 1.0 : static_cast<double>(model.beams.delta * model.beams.n_beam);
    c.lambda_intf = c.lambda_serve / thin;
    c.r_max = model.quad.truncation_factor * 0.5 / std::sqrt(c.lambda_serve);
    c.p_v = vertical_block_probability(1.0, h_U, model.spatial);
    const double lb = per_km2_to_per_m2(model.spatial.lambda_B);
    c.c0 = lb * model.spatial.W * model.spatial.D;
    c.c1 = 2.0 * lb * (model.spatial.W + model.spatial.D) / kPi;
    c.opaque = model.channel.gamma <= 0.0;
    return c;
}

/// Rising factorial m (m + 1) ... (m + k - 1).
double rising(int m, int k)
{
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= m + i;
    return r;
}

std::vector<double> laplace_in_context(double s, double r, const HeightContext& c, int order)
{
    const AnalyticModel& model = *c.model;
    const int m = model.channel.m;
    const double alpha = model.channel.alpha;
    std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
    if (r < c.r_max && c.lambda_intf > 0.0) {
        for (int k = 0; k <= order; ++k) {
            auto integrand = [&](double t) {
                const double base = c.visible(t) * t;
                if (base == 0.0)
                    return 0.0;
                const double v = c.vertical_db(t);
                const double ell = path_gain(t, c.dh, alpha) * c.pen(t) / m;
                double acc = 0.0;
                for (std::size_t j = 0; j < c.marks.h_db.size(); ++j) {
                    const double a = c.combined_linear(v, c.marks.h_db[j]) * ell;
                    const double term = k == 0 ? 1.0 - std::pow(1.0 + s * a, -m)
                                               : std::pow(a, k) * std::pow(1.0 + s * a, -m - k);
                    acc += c.marks.weight[j] * term;
                }
                return base * acc;
            };
            const QuadResult q = integrate(integrand, r, c.r_max, model.quad);
            const double pre = 2.0 * kPi * c.lambda_intf;
            g[static_cast<std::size_t>(k)] =
                k == 0 ? -pre * q.value : pre * (k % 2 == 0 ? 1.0 : -1.0) * rising(m, k) * q.value;
        }
    }
    // L = exp(g0); L^(n) = sum_k C(n-1, k) g^(k+1) L^(n-1-k).
    std::vector<double> L(static_cast<std::size_t>(order) + 1, 0.0);
    L[0] = std::exp(g[0]);
    for (int n = 1; n <= order; ++n) {
        double acc = 0.0;
        double binom = 1.0;
        for (int k = 0; k <= n - 1; ++k) {
            acc += binom * g[static_cast<std::size_t>(k + 1)] * L[static_cast<std::size_t>(n - 1 - k)];
            binom = binom * (n - 1 - k) / (k + 1);
        }
        L[static_cast<std::size_t>(n)] = acc;
    }
    return L;
}

double conditional_in_context(double T, double r, const HeightContext& c)
{
    const AnalyticModel& model = *c.model;
    const int m = model.channel.m;
    const double ell = path_gain(r, c.dh, model.channel.alpha) * c.pen(r);
    const double v = c.vertical_db(r);
    double cov = 0.0;
    for (std::size_t j = 0; j < c.marks.h_db.size(); ++j) {
        const double sig = c.combined_linear(v, c.marks.h_db[j]) * ell;
        if (!(sig > 0.0))
            continue;
        const double s = m * T / sig;
        const auto L = laplace_in_context(s, r, c, m - 1);
        double term = 0.0;
        double pw = 1.0;  // (-s)^p / p!
        for (int p = 0; p < m; ++p) {
            term += pw * L[static_cast<std::size_t>(p)];
            pw *= -s / (p + 1);
        }
        cov += c.marks.weight[j] * std::clamp(term, 0.0, 1.0);
    }
    return cov;
}

/// Density of the serving 2D distance: nearest unobstructed MBS for opaque
/// buildings, nearest MBS otherwise.
double serving_density(double r, const HeightContext& c)
{
    const double lam = c.lambda_serve;
    if (!c.opaque)
        return 2.0 * kPi * lam * r * std::exp(-lam * kPi * r * r);
    const double a = c.p_v * c.c1;
    const double e0 = std::exp(-c.p_v * c.c0);
    // Integral of visible(u) u du over [0, r].
    const double inner = a * r < 1e-6 ? e0 * r * r * (0.5 - a * r / 3.0)
                                      : e0 * (1.0 - std::exp(-a * r) * (1.0 + a * r)) / (a * a);
    return 2.0 * kPi * lam * r * c.visible(r) * std::exp(-2.0 * kPi * lam * inner);
}

QuadResult coverage_at_height_impl(double T, double h_U, const AnalyticModel& model, bool omni)
{
    if (!(T > 0.0))
        throw std::invalid_argument("coverage: threshold must be > 0");
    const HeightContext c = make_context(h_U, model, omni);
    return integrate([&](double r) { return serving_density(r, c) * conditional_in_context(T, r, c); }, 0.0,
                     c.r_max, model.quad);
}

QuadResult coverage_impl(double T, const AnalyticModel& model, bool omni)
{
    const double lo = model.spatial.h_U_min;
    const double hi = model.spatial.h_U_max;
    const auto& rule = gauss_legendre(model.h_nodes);
    const int P = std::max(1, model.h_panels);
    const std::size_t n = rule.nodes.size() * static_cast<std::size_t>(P);
    const double width = (hi - lo) / P;
    auto parts = parallel_map<QuadResult>(n, model.workers, [&](std::size_t i) {
        const std::size_t panel = i / rule.nodes.size();
        const std::size_t j = i % rule.nodes.size();
        const double h = lo + width * (static_cast<double>(panel) + 0.5 * (1.0 + rule.nodes[j]));
        return coverage_at_height_impl(T, h, model, omni);
    });
    QuadResult out;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * rule.weights[i % rule.nodes.size()] / P;
        out.value += w * parts[i].value;
        out.error += w * parts[i].error;
        out.converged = out.converged && parts[i].converged;
    }
    return out;
}

} // namespace

std::vector<double> interference_laplace(double s, double r_UM, double h_U, const AnalyticModel& model, int order)
{
    if (s < 0.0)
        throw std::invalid_argument("interference_laplace: s must be >= 0");
    if (order < 0)
        throw std::invalid_argument("interference_laplace: order must be >= 0");
    const HeightContext c = make_context(h_U, model, model.beams.omni);
    return laplace_in_context(s, r_UM, c, order);
}

double conditional_coverage(double T, double r_UM, double h_U, const AnalyticModel& model)
{
    const HeightContext c = make_context(h_U, model, model.beams.omni);
    return conditional_in_context(T, r_UM, c);
}

QuadResult coverage_at_height(double T, double h_U, const AnalyticModel& model)
{
    return coverage_at_height_impl(T, h_U, model, model.beams.omni);
}

QuadResult coverage_probability(double T, const AnalyticModel& model) { return coverage_impl(T, model, true); }

QuadResult coverage_with_reuse(double T, const AnalyticModel& model)
{
    return coverage_impl(T, model, model.beams.omni);
}

double bandwidth_share(const AnalyticModel& model, const CapacityParams& capacity)
{
    return capacity.bandwidth_hz / (model.beams.n_colors() * capacity.n_u_sector);
}

double required_sir(const AnalyticModel& model, const CapacityParams& capacity)
{
    return std::expm1(capacity.target_rate() / bandwidth_share(model, capacity));
}

double achievable_rate(const AnalyticModel& model, const CapacityParams& capacity)
{
    // E[ln(1 + SIR)] = integral over x >= 0 of P(SIR > e^x - 1).
    constexpr double x_max = 16.0;
    const double mean_log = integrate_fixed(
        [&](double x) { return coverage_with_reuse(std::expm1(x), model).value; }, 0.0, x_max, 8, 4);
    return bandwidth_share(model, capacity) * mean_log;
}

double reliability(const AnalyticModel& model, const CapacityParams& capacity)
{
    return coverage_with_reuse(required_sir(model, capacity), model).value;
}

std::optional<double> inverse_coverage(double R, const AnalyticModel& model)
{
    double lo = -60.0;
    double hi = 60.0;
    const double p_lo = coverage_with_reuse(db_to_linear(lo), model).value;
    const double p_hi = coverage_with_reuse(db_to_linear(hi), model).value;
    if (!(R <= p_lo && R >= p_hi))
        return std::nullopt;
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (coverage_with_reuse(db_to_linear(mid), model).value >= R)
            lo = mid;
        else
            hi = mid;
    }
    return db_to_linear(0.5 * (lo + hi));
}

Supportable supportable_uams(double R, const AnalyticModel& model, const CapacityParams& capacity)
{
    if (!(R > 0.0 && R < 1.0))
        throw std::invalid_argument("supportable_uams: R must be in (0, 1)");
    Supportable out;
    const auto T = inverse_coverage(R, model);
    if (!T)
        return out;
    out.feasible = true;
    out.threshold_linear = *T;
    out.uams_per_sector =
        capacity.bandwidth_hz / model.beams.n_colors() * std::log1p(*T) / capacity.target_rate();
    return out;
}

} // namespace uam
