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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "misobench/analysis.hpp"
#include "misobench/ensembles.hpp"
#include "misobench/montecarlo.hpp"
#include "misobench/schemes.hpp"

using namespace miso;

namespace {

void BM_HaarFrame(benchmark::State &state)
{
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_haar_frame(m, n, RngStream{1, i++}));
}
BENCHMARK(BM_HaarFrame)->Args({4, 1})->Args({4, 2})->Args({4, 4})->Args({16, 2})->Args({64, 2});

void BM_InstantMi(benchmark::State &state, SchemeId scheme)
{
    const ChannelVector h(CVector::Ones(4));
    SchemeDraw draw;
    draw.frame = sample_haar_frame(4, scheme.frame_columns(), RngStream{2, 0});
    if (scheme.needs_phases())
        draw.phases = {0.3, 1.7};
    const SnrPoint snr(10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(instant_mi(scheme, h, snr, draw));
}
BENCHMARK_CAPTURE(BM_InstantMi, ir_bf, SchemeId::ir_bf());
BENCHMARK_CAPTURE(BM_InstantMi, ir_bf_a, SchemeId::ir_bf_a());
BENCHMARK_CAPTURE(BM_InstantMi, ir_abba, SchemeId::ir_abba());
BENCHMARK_CAPTURE(BM_InstantMi, ir_trombi, SchemeId::ir_trombi());

void BM_GapQuadrature(benchmark::State &state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gap_closed_form(SnrPoint(10.0), m));
}
BENCHMARK(BM_GapQuadrature)->Arg(3)->Arg(8)->Arg(64)->Arg(4096);

void BM_GapLimit(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(gap_limit_virtual(2));
}
BENCHMARK(BM_GapLimit);

void BM_ErgodicMi(benchmark::State &state)
{
    McConfig cfg;
    cfg.trials = state.range(0);
    cfg.workers = 1;
    const ChannelVector h(CVector::Ones(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(ergodic_mi(SchemeId::ir_bf_a(), h, SnrPoint(10.0), cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ErgodicMi)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
