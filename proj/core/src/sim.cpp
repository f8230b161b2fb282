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

#include "uam/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "uam/master.hpp"
#include "uam/parallel.hpp"
#include "uam/stats.hpp"
#include "uam/units.hpp"

namespace uam {

namespace {

// Stream identifiers folded into derived seeds.
constexpr std::uint64_t kDropStream = 11;
constexpr std::uint64_t kPlacementStream = 12;
constexpr std::uint64_t kFadingStream = 13;
constexpr std::uint64_t kColorStream = 14;
constexpr std::uint64_t kProbeStream = 15;
constexpr std::uint64_t kMissionStream = 16;
constexpr std::uint64_t kMasterStream = 17;

double to_db(double sinr) { return sinr > 0.0 ? linear_to_db(sinr) : -std::numeric_limits<double>::infinity(); }

} // namespace

DropScene build_scene(const ScenarioConfig& cfg, const BeamPlanSpec& beams, std::uint64_t seed)
{
    SpatialParams spatial = cfg.spatial;
    spatial.lambda_U = 0.0;  // UAMs are placed by the studies themselves
    DropScene s;
    s.env = cfg.layout == LayoutKind::Grid ? grid_environment(cfg.grid, spatial, seed)
                                           : sample_environment(spatial, seed);
    const Coloring coloring = cfg.layout == LayoutKind::Grid ? Coloring::Grid : Coloring::Random;
    s.plan = assign_reuse_colors(beams, s.env.mbs_sites.size(), coloring, derive_seed(seed, {kColorStream}));
    s.index = BlockageIndex(s.env.buildings);
    s.channel = cfg.channel;
    s.antenna = cfg.antenna;
    return s;
}

Layer layer_for_height(const BeamPlanSpec& beams, double h_U, double vtol_ceiling_m)
{
    if (!beams.multi_layer)
        return Layer::Single;
    return h_U <= vtol_ceiling_m ? Layer::Down : Layer::Up;
}

Layer layer_for_phase(const BeamPlanSpec& beams, FlightPhase phase)
{
    if (!beams.multi_layer)
        return Layer::Single;
    return is_vertical(phase) ? Layer::Down : Layer::Up;
}

ProbeResult evaluate_probe(const DropScene& scene, const Vec3& uam, Layer layer, Rng& fading_rng)
{
    const RadioScene radio = scene.radio();
    const auto links = site_links(uam, radio);
    const auto fading = draw_fading(fading_rng, links.size(), scene.channel.m);
    const Association a = associate(uam, radio, layer, links);
    ProbeResult r;
    r.position = uam;
    r.served = a.served;
    if (a.served)
        r.sinr = sinr(uam, radio, a, links, fading).sinr;
    std::size_t others = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (a.served && i == a.site) {
            r.serving_blockers = links[i].geometry.n_blockers;
            continue;
        }
        sum += static_cast<double>(links[i].geometry.n_blockers);
        ++others;
    }
    r.interfering_blockers = others ? sum / static_cast<double>(others) : 0.0;
    return r;
}

std::vector<ProbeResult> run_drops(const ScenarioConfig& cfg, const DropOptions& options)
{
    validate(cfg);
    const BeamPlanSpec beams = effective_beams(cfg);
    return parallel_map<ProbeResult>(options.drops, cfg.study.workers, [&](std::size_t d) {
        const std::uint64_t seed = derive_seed(cfg.study.seed, {kDropStream, d});
        const DropScene scene = build_scene(cfg, beams, seed);
        Rng place(derive_seed(seed, {kPlacementStream}));
        const double lo = options.height.value_or(cfg.spatial.h_U_min);
        const double hi = options.height.value_or(cfg.spatial.h_U_max);
        Vec3 uam;
        if (lo == hi) {
            // Fixed height: redraw the 2D point until it is clear of every volume.
            for (int tries = 0;; ++tries) {
                uam = {place.uniform(-cfg.study.region_half_width, cfg.study.region_half_width),
                       place.uniform(-cfg.study.region_half_width, cfg.study.region_half_width), lo};
                if (std::none_of(scene.env.buildings.begin(), scene.env.buildings.end(),
                                 [&](const Building& b) { return inside_volume(uam, b); }))
                    break;
                if (tries > 10000)
                    throw std::runtime_error("run_drops: no free reference position");
            }
        } else {
            uam = sample_uam_position(place, scene.env.buildings, cfg.study.region_half_width, lo, hi);
        }
        Rng fading(derive_seed(seed, {kFadingStream}));
        return evaluate_probe(scene, uam, layer_for_height(beams, uam.z, cfg.study.vtol_ceiling_m), fading);
    });
}

double coverage_fraction(std::span<const ProbeResult> results, double T)
{
    if (results.empty())
        return 0.0;
    std::size_t n = 0;
    for (const auto& r : results)
        n += (r.served && r.sinr > T) ? 1 : 0;
    return static_cast<double>(n) / static_cast<double>(results.size());
}

ReliabilitySummary summarize(std::span<const ReliabilityRecord> records, std::size_t master_epochs)
{
    ReliabilitySummary s;
    s.master_epochs = master_epochs;
    std::size_t vs = 0, vt = 0, cs = 0, ct = 0, counted = 0;
    double per_uam = 0.0;
    for (const auto& r : records) {
        vs += r.vtol_success;
        vt += r.vtol_total;
        cs += r.cruise_success;
        ct += r.cruise_total;
        if (r.total() > 0) {
            per_uam += r.reliability();
            ++counted;
        }
    }
    s.samples = vt + ct;
    s.overall = s.samples ? static_cast<double>(vs + cs) / static_cast<double>(s.samples) : 0.0;
    s.vtol = vt ? static_cast<double>(vs) / static_cast<double>(vt) : 0.0;
    s.cruise = ct ? static_cast<double>(cs) / static_cast<double>(ct) : 0.0;
    s.mean_per_uam = counted ? per_uam / static_cast<double>(counted) : 0.0;
    return s;
}

MetricsReport probe_report(std::span<const ProbeResult> probes, double threshold_db)
{
    MetricsReport rep;
    const double T = db_to_linear(threshold_db);
    rep.sinr_db.reserve(probes.size());
    for (const auto& p : probes)
        rep.sinr_db.push_back(p.served ? to_db(p.sinr) : -std::numeric_limits<double>::infinity());
    std::sort(rep.sinr_db.begin(), rep.sinr_db.end());
    for (int t = -20; t <= 40; ++t)
        rep.coverage_vs_threshold.emplace_back(t, coverage_fraction(probes, db_to_linear(t)));

    std::vector<double> heights;
    for (const auto& p : probes)
        heights.push_back(p.position.z);
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    for (double h : heights) {
        std::size_t n = 0, ok = 0;
        for (const auto& p : probes)
            if (p.position.z == h) {
                ++n;
                ok += (p.served && p.sinr > T) ? 1 : 0;
            }
        rep.coverage_vs_height.emplace_back(h, static_cast<double>(ok) / static_cast<double>(n));
    }

    // Ranges 1..5 from the lowest SINR fifth to the highest.
    std::vector<std::size_t> order(probes.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double sa = probes[a].served ? probes[a].sinr : -1.0;
        const double sb = probes[b].served ? probes[b].sinr : -1.0;
        return sa < sb;
    });
    const std::size_t n = probes.size();
    for (int q = 0; q < 5 && n > 0; ++q) {
        QuintileRow row;
        row.range = q + 1;
        const std::size_t lo = n * static_cast<std::size_t>(q) / 5;
        const std::size_t hi = n * static_cast<std::size_t>(q + 1) / 5;
        double sinr_sum = 0.0;
        std::size_t sinr_n = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            const auto& p = probes[order[k]];
            row.mean_height += p.position.z;
            row.mean_serving_blockers += static_cast<double>(p.serving_blockers);
            row.mean_interfering_blockers += p.interfering_blockers;
            if (p.served && p.sinr > 0.0) {
                sinr_sum += to_db(p.sinr);
                ++sinr_n;
            }
        }
        row.count = hi - lo;
        if (row.count) {
            const double c = static_cast<double>(row.count);
            row.mean_height /= c;
            row.mean_serving_blockers /= c;
            row.mean_interfering_blockers /= c;
        }
        row.mean_sinr_db = sinr_n ? sinr_sum / static_cast<double>(sinr_n) : 0.0;
        rep.quintiles.push_back(row);
    }
    for (const auto& p : probes) {
        rep.mean_serving_blockers += static_cast<double>(p.serving_blockers);
        rep.mean_interfering_blockers += p.interfering_blockers;
    }
    if (n) {
        rep.mean_serving_blockers /= static_cast<double>(n);
        rep.mean_interfering_blockers /= static_cast<double>(n);
    }
    return rep;
}

MetricsReport run_geometry_study(const ScenarioConfig& cfg)
{
    validate(cfg);
    const BeamPlanSpec beams = effective_beams(cfg);
    const std::uint64_t seed = derive_seed(cfg.study.seed, {kProbeStream});
    const DropScene scene = build_scene(cfg, beams, seed);
    const double half = cfg.study.region_half_width;
    const double step = cfg.study.probe_spacing_m;
    const int n_side = static_cast<int>(std::floor(2.0 * half / step + 1e-9)) + 1;
    std::vector<Vec3> points;
    for (double h : cfg.study.probe_heights)
        for (int iy = 0; iy < n_side; ++iy)
            for (int ix = 0; ix < n_side; ++ix) {
                const Vec3 p{-half + ix * step, -half + iy * step, h};
                if (std::none_of(scene.env.buildings.begin(), scene.env.buildings.end(),
                                 [&](const Building& b) { return inside_volume(p, b); }))
                    points.push_back(p);
            }
    const auto probes = parallel_map<ProbeResult>(points.size(), cfg.study.workers, [&](std::size_t i) {
        Rng fading(derive_seed(seed, {kFadingStream, i}));
        return evaluate_probe(scene, points[i], layer_for_height(beams, points[i].z, cfg.study.vtol_ceiling_m),
                              fading);
    });
    return probe_report(probes, cfg.study.threshold_db);
}

namespace {

MobilityResult mobility_study(const ScenarioConfig& cfg, const BeamPlanSpec& beams, std::uint64_t seed,
                              const MobilityOptions& options)
{
    const DropScene scene = build_scene(cfg, beams, seed);
    const RadioScene radio = scene.radio();
    const MobilityParams& mp = cfg.mobility;
    const double p_band = cfg.capacity.bandwidth_hz / scene.plan.spec.n_colors();
    const double target = cfg.capacity.target_rate();

    struct Flight {
        Mission mission;
        double start = 0.0;  // simulation time at which the mission's clock reads 0
    };
    std::vector<Flight> flights;
    std::vector<ReliabilityRecord> records;
    Rng mission_rng(derive_seed(seed, {kMissionStream}));
    auto new_flight = [&](double start) {
        flights.push_back({sample_mission(mp, cfg.spatial, scene.env.buildings, mission_rng), start});
        records.push_back({});
        records.back().uam_id = records.size() - 1;
        return flights.size() - 1;
    };

    std::deque<std::size_t> waiting;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < mp.max_concurrent; ++i) {
        const std::size_t id = new_flight(0.0);
        flights[id].start = -mission_rng.uniform01() * mission_duration(flights[id].mission, mp);
        waiting.push_back(id);
    }
    admission_control(waiting, active, mp.max_concurrent);

    MobilityResult out;
    std::size_t master_epochs = 0;
    const auto steps = static_cast<std::size_t>(std::floor(mp.duration_s / mp.dt_s + 1e-9));
    for (std::size_t step = 0; step < steps; ++step) {
        const double t = static_cast<double>(step) * mp.dt_s;
        // Retire completed flights and replace them immediately.
        std::vector<std::size_t> still;
        for (std::size_t id : active) {
            if (position_at(flights[id].mission, t - flights[id].start, mp).phase == FlightPhase::Completed)
                waiting.push_back(new_flight(t));
            else
                still.push_back(id);
        }
        active = std::move(still);
        admission_control(waiting, active, mp.max_concurrent);

        const std::size_t n = active.size();
        std::vector<Pose> pose(n);
        std::vector<std::vector<SiteLink>> links(n);
        std::vector<Association> assoc(n);
        std::vector<std::size_t> attached(scene.plan.tx.size(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            const Flight& f = flights[active[k]];
            pose[k] = position_at(f.mission, t - f.start, mp);
            links[k] = site_links(pose[k].position, radio);
            assoc[k] = associate(pose[k].position, radio, layer_for_phase(beams, pose[k].phase), links[k]);
            if (assoc[k].served)
                ++attached[assoc[k].tx];
            if (options.keep_trace)
                out.trace.push_back({t, active[k], pose[k].position, pose[k].phase});
        }
        std::vector<double> rate(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            if (!assoc[k].served)
                continue;
            Rng rng(derive_seed(seed, {kFadingStream, step, active[k]}));
            const auto fading = draw_fading(rng, links[k].size(), cfg.channel.m);
            const SinrSample s = sinr(pose[k].position, radio, assoc[k], links[k], fading);
            const double band = p_band * scene.plan.tx[assoc[k].tx].width();
            rate[k] = band / static_cast<double>(attached[assoc[k].tx]) * std::log1p(s.sinr);
        }
        std::vector<double> final_rate = rate;
        if (cfg.toggles.master && n > 1) {
            const auto sel = select_master(RateReport{rate, target});
            EpochLogRow row;
            row.step = step;
            if (sel) {
                ++master_epochs;
                row.master = active[sel->master];
                std::vector<double> snr;
                for (std::size_t j : sel->failures) {
                    Rng rng(derive_seed(seed, {kMasterStream, step, active[j]}));
                    const double fade = nakagami_power(rng, cfg.channel.m);
                    snr.push_back(master_snr(pose[sel->master].position, pose[j].position, &scene.index, cfg.master,
                                             cfg.channel, cfg.capacity.bandwidth_hz, fade));
                }
                const auto extra = assistive_rate(snr, cfg.master);
                for (std::size_t q = 0; q < sel->failures.size(); ++q) {
                    const std::size_t j = sel->failures[q];
                    final_rate[j] = rate[j] + extra[q];
                    row.failures.push_back(active[j]);
                    row.deficits.push_back(rate[j] - target);
                    row.post_rates.push_back(final_rate[j]);
                }
                // The master relays the failures' deficits out of its own surplus.
                final_rate[sel->master] = rate[sel->master] - sel->deficit;
            } else {
                for (std::size_t k = 0; k < n; ++k)
                    if (rate[k] < target) {
                        row.failures.push_back(active[k]);
                        row.deficits.push_back(rate[k] - target);
                        row.post_rates.push_back(rate[k]);
                    }
            }
            if (options.keep_epochs)
                out.epochs.push_back(std::move(row));
        }
        for (std::size_t k = 0; k < n; ++k) {
            ReliabilityRecord& r = records[active[k]];
            const bool ok = final_rate[k] * cfg.capacity.t_R_s >= cfg.capacity.tau_R_bits;
            if (is_vertical(pose[k].phase)) {
                ++r.vtol_total;
                r.vtol_success += ok ? 1 : 0;
            } else {
                ++r.cruise_total;
                r.cruise_success += ok ? 1 : 0;
            }
        }
    }
    out.records = std::move(records);
    out.summary = summarize(out.records, master_epochs);
    return out;
}

} // namespace

MobilityResult run_mobility_study(const ScenarioConfig& cfg, std::uint64_t seed, const MobilityOptions& options)
{
    validate(cfg);
    return mobility_study(cfg, effective_beams(cfg), seed, options);
}

MobilityResult run_mobility_seeds(const ScenarioConfig& cfg, std::size_t n_seeds)
{
    validate(cfg);
    const BeamPlanSpec beams = effective_beams(cfg);
    auto runs = parallel_map<MobilityResult>(n_seeds, cfg.study.workers, [&](std::size_t i) {
        return mobility_study(cfg, beams, cfg.study.seed + i, {});
    });
    MobilityResult pooled;
    std::size_t epochs = 0;
    for (auto& r : runs) {
        for (auto rec : r.records) {
            rec.uam_id = pooled.records.size();
            pooled.records.push_back(rec);
        }
        epochs += r.summary.master_epochs;
        pooled.per_seed.push_back(r.summary);
    }
    pooled.summary = summarize(pooled.records, epochs);
    return pooled;
}

const std::vector<std::string>& sweep_parameters()
{
    static const std::vector<std::string> names{"imd",     "lambda_B", "sigma_hB", "h_M",   "h_U",
                                                "lambda_M", "n_beam",   "delta",    "tilt_deg"};
    return names;
}

std::vector<SweepRow> sweep(const ScenarioConfig& cfg, const std::string& parameter, std::span<const double> grid)
{
    const auto& names = sweep_parameters();
    if (std::find(names.begin(), names.end(), parameter) == names.end())
        throw std::invalid_argument("sweep: unknown parameter " + parameter);
    std::vector<SweepRow> rows;
    for (double v : grid) {
        ScenarioConfig c = cfg;
        DropOptions opt;
        opt.drops = cfg.study.drops;
        if (parameter == "imd")
            c.grid.imd = v;
        else if (parameter == "lambda_B")
            c.spatial.lambda_B = v;
        else if (parameter == "sigma_hB")
            c.spatial.sigma_hB = v;
        else if (parameter == "h_M")
            c.spatial.h_M = v;
        else if (parameter == "h_U")
            opt.height = v;
        else if (parameter == "lambda_M")
            c.spatial.lambda_M = v;
        else if (parameter == "n_beam")
            c.beams.n_beam = static_cast<int>(v);
        else if (parameter == "delta")
            c.beams.delta = static_cast<int>(v);
        else if (parameter == "tilt_deg")
            c.tilt.baseline_deg = v;
        const auto res = run_drops(c, opt);
        SweepRow row;
        row.value = v;
        row.coverage = coverage_fraction(res, db_to_linear(cfg.study.threshold_db));
        std::vector<double> db;
        std::size_t served = 0;
        for (const auto& r : res) {
            if (r.served && r.sinr > 0.0) {
                db.push_back(to_db(r.sinr));
                ++served;
            }
        }
        row.served_fraction = static_cast<double>(served) / static_cast<double>(res.size());
        if (!db.empty()) {
            row.mean_sinr_db = mean(db);
            std::sort(db.begin(), db.end());
            row.p5_sinr_db = db[static_cast<std::size_t>(0.05 * static_cast<double>(db.size() - 1))];
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace uam
