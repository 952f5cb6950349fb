// SPDX-License-Identifier: Apache-2.0
//
// misobench - scalar coding limits for open-loop MISO channels
// Copyright (C) 2026 The misobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "misobench/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "misobench/error.hpp"
#include "misobench/rng.hpp"
#include "misobench/stats.hpp"

namespace miso {

namespace {

bool full_projection_is_deterministic(const SchemeId &scheme, int m)
{
    switch (scheme.kind) {
    case SchemeKind::IrBf:
    case SchemeKind::IrBfA:
    case SchemeKind::IrOstbc:
        return scheme.frame_columns() == m;
    default:
        return false;
    }
}

SchemeDraw draw_for_trial(const SchemeId &scheme, int m, const RngStream &stream)
{
    Xoshiro256 engine(stream);
    SchemeDraw draw;
    if (const int cols = scheme.frame_columns(); cols > 0)
        draw.frame = sample_haar_frame(m, cols, engine);
    if (scheme.needs_phases()) {
        const double t1 = 2.0 * std::numbers::pi * engine.uniform();
        const double t2 = 2.0 * std::numbers::pi * engine.uniform();
        draw.phases = {t1, t2};
    }
    return draw;
}

RunningStats run_block(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, std::uint64_t seed,
                       std::int64_t first, std::int64_t last)
{
    RunningStats stats;
    for (std::int64_t i = first; i < last; ++i) {
        const SchemeDraw draw = draw_for_trial(scheme, h.m(), {seed, static_cast<std::uint64_t>(i)});
        stats.push(instant_mi(scheme, h, snr, draw));
    }
    return stats;
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

void McConfig::validate() const
{
    if (trials < 1)
        throw Error(ErrorKind::DomainError, "trials must be positive");
    if (max_trials < 1 || trials > max_trials)
        throw Error(ErrorKind::DomainError, "trials must not exceed max_trials");
    if (target_stderr_bits && !(*target_stderr_bits > 0.0))
        throw Error(ErrorKind::DomainError, "target stderr must be positive");
    if (workers < 0)
        throw Error(ErrorKind::DomainError, "worker count must be nonnegative");
}

MiEstimate ergodic_mi(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, const McConfig &cfg)
{
    cfg.validate();
    require_normalized(h, "ergodic_mi");
    finite_snr(snr, "ergodic_mi");

    if (!scheme.is_randomized()) {
        return {instant_mi(scheme, h, snr, {}), 0.0, 1};
    }
    if (full_projection_is_deterministic(scheme, h.m())) {
        SchemeDraw draw;
        draw.frame = OrthonormalFrame::canonical(h.m(), h.m());
        return {instant_mi(scheme, h, snr, draw), 0.0, 1};
    }
    // Surface draw-shape errors before spinning up workers.
    instant_mi(scheme, h, snr, draw_for_trial(scheme, h.m(), {cfg.seed, 0}));

    const std::int64_t num_blocks = (cfg.trials + kTrialBlock - 1) / kTrialBlock;
    const int workers = static_cast<int>(std::min<std::int64_t>(resolve_workers(cfg.workers), num_blocks));
    // Without a stopping rule everything is one wave.
    const std::int64_t wave = cfg.target_stderr_bits ? std::max<std::int64_t>(4 * workers, 1) : num_blocks;

    RunningStats total;
    std::vector<RunningStats> partial;
    for (std::int64_t wave_start = 0; wave_start < num_blocks; wave_start += wave) {
        const std::int64_t wave_end = std::min(num_blocks, wave_start + wave);
        partial.assign(static_cast<std::size_t>(wave_end - wave_start), RunningStats{});

        auto work = [&](std::atomic<std::int64_t> &next) {
            for (std::int64_t b = next++; b < wave_end; b = next++) {
                const std::int64_t first = b * kTrialBlock;
                const std::int64_t last = std::min(cfg.trials, first + kTrialBlock);
                partial[static_cast<std::size_t>(b - wave_start)] = run_block(scheme, h, snr, cfg.seed, first, last);
            }
        };
        std::atomic<std::int64_t> next{wave_start};
        if (workers <= 1) {
            work(next);
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] { work(next); });
        }

        for (const auto &block : partial) {
            total.merge(block);
            if (cfg.target_stderr_bits && total.count() >= kTrialBlock &&
                total.standard_error() <= *cfg.target_stderr_bits)
                return {total.mean(), total.standard_error(), total.count()};
        }
    }
    return {total.mean(), total.standard_error(), total.count()};
}

ChannelVector sample_normalized_channel(int m, const RngStream &stream)
{
    if (m < 1)
        throw Error(ErrorKind::DomainError, "antenna count must be positive");
    Xoshiro256 engine(stream);
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector h(m);
    for (int i = 0; i < m; ++i) {
        const double re = normal(engine);
        const double im = normal(engine);
        h(i) = cdouble(re, im);
    }
    return normalize_channel(ChannelVector(std::move(h)));
}

NdoReport ndo_check(const SchemeId &scheme, int m, SnrPoint snr, int num_directions, const McConfig &cfg)
{
    if (scheme.frame_columns() == 0)
        throw Error(ErrorKind::DomainError, "NDO check applies to randomized-beamforming schemes only");
    if (num_directions < 1)
        throw Error(ErrorKind::DomainError, "need at least one channel direction");

    NdoReport report;
    const std::uint64_t direction_seed = derive_seed(cfg.seed, 0x4e444f);
    for (int k = 0; k < num_directions; ++k) {
        report.directions.push_back(sample_normalized_channel(m, {direction_seed, static_cast<std::uint64_t>(k)}));
        McConfig per = cfg;
        per.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(k) + 1);
        report.estimates.push_back(ergodic_mi(scheme, report.directions.back(), snr, per));
    }

    for (std::size_t i = 0; i < report.estimates.size(); ++i) {
        for (std::size_t j = i + 1; j < report.estimates.size(); ++j) {
            const auto &a = report.estimates[i];
            const auto &b = report.estimates[j];
            const double gap = std::abs(a.mean_bits - b.mean_bits);
            const double se = std::hypot(a.stderr_bits, b.stderr_bits);
            if (gap > 3.0 * se)
                report.pass = false;
            if (gap > report.max_pairwise_gap_bits) {
                report.max_pairwise_gap_bits = gap;
                report.stderr_bits = se;
            }
        }
    }
    return report;
}

std::vector<MiEstimate> sweep_ergodic_mi(const SchemeId &scheme, const ChannelVector &h,
                                         std::span<const SnrPoint> snr_grid, const McConfig &cfg)
{
    std::vector<MiEstimate> out;
    out.reserve(snr_grid.size());
    for (std::size_t k = 0; k < snr_grid.size(); ++k) {
        McConfig point = cfg;
        if (k > 0)
            point.seed = derive_seed(cfg.seed, k);
        out.push_back(ergodic_mi(scheme, h, snr_grid[k], point));
    }
    return out;
}

} // namespace miso
