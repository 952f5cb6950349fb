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

#include <array>
#include <cstdint>
#include <limits>

namespace miso {

/// Counter-addressed random substream. (seed, stream_index) fully determines
/// every value drawn from `engine()`; Monte-Carlo trial i uses index i so the
/// draws do not depend on how trials are spread over workers.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_index = 0;

    friend bool operator==(const RngStream &, const RngStream &) = default;
};

std::uint64_t splitmix64(std::uint64_t &state) noexcept;

/// Seed for an independent family of streams, e.g. one per SNR grid point.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

/// xoshiro256++ generator, initialized from a RngStream via splitmix64.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(const RngStream &stream) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::array<std::uint64_t, 4> s_{};
};

inline Xoshiro256 make_engine(const RngStream &stream) noexcept { return Xoshiro256(stream); }

} // namespace miso
