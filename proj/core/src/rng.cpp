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

#include "misobench/rng.hpp"

#include <bit>

namespace miso {

std::uint64_t splitmix64(std::uint64_t &state) noexcept
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept
{
    std::uint64_t state = seed ^ (0x6a09e667f3bcc909ULL * (salt + 1));
    splitmix64(state);
    return splitmix64(state);
}

Xoshiro256::Xoshiro256(const RngStream &stream) noexcept
{
    // Hash both words before expanding so neighbouring indices decorrelate.
    std::uint64_t state = stream.seed;
    std::uint64_t mixed = splitmix64(state) ^ stream.stream_index;
    state = mixed;
    mixed = splitmix64(state);
    state = mixed ^ std::rotl(stream.seed, 29);
    for (auto &word : s_)
        word = splitmix64(state);
}

Xoshiro256::result_type Xoshiro256::operator()() noexcept
{
    const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

} // namespace miso
