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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "misobench/core_model.hpp"
#include "misobench/schemes.hpp"

namespace miso {

/// Trials are grouped in fixed blocks of this size; blocks are the unit of
/// parallel work, of deterministic merging, and of early-stop checks.
inline constexpr std::int64_t kTrialBlock = 1000;

struct McConfig {
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    std::optional<double> target_stderr_bits;
    std::int64_t max_trials = 100000000;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    int workers = 0;

    /// Throws DomainError on inconsistent settings.
    void validate() const;
};

/// Ergodic (per-block randomized) mutual information E[instant_mi].
///
/// Trial i draws its frame and phases from RngStream{cfg.seed, i}; per-block
/// partial sums are merged in trial order so the result is bit-identical for
/// any worker count. Schemes without randomization, and IR_BF / IR_BF_A /
/// IR_OSTBC when the frame spans all M antennas, are evaluated once and
/// reported with trials = 1 and stderr 0.
MiEstimate ergodic_mi(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, const McConfig &cfg);

struct NdoReport {
    double max_pairwise_gap_bits = 0.0;
    /// Combined standard error sqrt(se_i^2 + se_j^2) of the widest pair.
    double stderr_bits = 0.0;
    bool pass = true;
    std::vector<ChannelVector> directions;
    std::vector<MiEstimate> estimates;
};

/// Estimates the ergodic MI along `num_directions` random normalized channels
/// and checks that every pair agrees within 3 combined standard errors.
NdoReport ndo_check(const SchemeId &scheme, int m, SnrPoint snr, int num_directions, const McConfig &cfg);

/// ergodic_mi at each grid point. Point k uses seed derive_seed(cfg.seed, k)
/// for k > 0 and cfg.seed itself for k = 0.
std::vector<MiEstimate> sweep_ergodic_mi(const SchemeId &scheme, const ChannelVector &h,
                                         std::span<const SnrPoint> snr_grid, const McConfig &cfg);

/// Random direction in C^m scaled to ||h||^2 = m.
ChannelVector sample_normalized_channel(int m, const RngStream &stream);

} // namespace miso
