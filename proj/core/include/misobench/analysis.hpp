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

#include <span>
#include <string_view>
#include <vector>

#include "misobench/core_model.hpp"
#include "misobench/quadrature.hpp"

namespace miso {

enum class GapMethod { Quadrature, MonteCarlo, AnalyticLimit };

std::string_view to_string(GapMethod method) noexcept;

/// Gap to the white-input mutual information, in bits and in dB
/// (gap_db = gap_bits * 10 log10 2).
struct GapValue {
    double gap_bits = 0.0;
    double gap_db = 0.0;
    GapMethod method = GapMethod::Quadrature;
    double abs_error_bound = 0.0;
};

GapValue make_gap(double gap_bits, GapMethod method, double abs_error_bound);

/// Density of the projection length r of a normalized channel onto the two
/// beamforming columns of IR-BF-A:
///   f_r(u) = 2 (M-1)(M-2) u^3 (1-u^2)^(M-3),   M >= 3.
double ir_bf_a_radius_pdf(double u, int m);

/// IR-BF-A gap Delta(snr, M) = log2(1+snr) - E[log2(1 + M snr r^2 / 2)],
/// integrated in v = r^2 against (M-1)(M-2) v (1-v)^(M-3).
/// Infinite snr dispatches to gap_asymptotic. M = 2 and snr = 0 give 0.
GapValue gap_closed_form(SnrPoint snr, int m);

/// Delta_M = lim_{snr->inf} Delta(snr, M) = E[log2(2 / (M r^2))].
GapValue gap_asymptotic(int m);

/// M -> infinity limit for n virtual antennas at full rate:
///   log2(n) - psi(n) / ln 2,
/// i.e. 0.8327 bits for n = 1 and 0.3900 bits for n = 2. The digamma value
/// is cross-checked against the truncated integral of
/// log2(n/z) z^(n-1) e^(-z) / Gamma(n) over [0, 50]. n > 2 loses rate and
/// the gap diverges: DivergentGap.
GapValue gap_limit_virtual(int n_virtual);

/// Gap of IR_OSTBC(n): log2(1+snr) - E[R log2(1 + snr M r^2 / (n R))] with
/// r^2 ~ Beta(n, M-n) and R = ostbc_max_rate(n). At infinite snr only the
/// rate-one cases n <= 2 are finite.
GapValue gap_general(SnrPoint snr, int m, int n_virtual);

struct MonotonicityReport {
    bool pass = true;
    std::vector<double> snr_db;
    std::vector<double> gap_bits;
    /// Largest decrease Delta(i) - Delta(i+1) seen (<= 0 when increasing).
    double max_drop = 0.0;
    double asymptotic_bits = 0.0;
};

/// Evaluates gap_closed_form on an ascending dB grid; passes iff every step
/// is nondecreasing within 1e-9 and the last value does not exceed
/// gap_asymptotic(m) + 1e-8.
MonotonicityReport verify_monotonicity(int m, std::span<const double> snr_grid_db);

namespace detail {
/// Integrates g(v) against the Beta(n, m - n) density on [0, 1] with
/// breakpoints clustered around the mean n/m.
QuadratureResult beta_expectation(const std::function<double(double)> &g, int m, int n, double abs_tol);
/// Breakpoints 0, c 2^-k .. c 2^j, 1 with c = scale.
std::vector<double> clustered_breakpoints(double scale, double upper, int below);
} // namespace detail

} // namespace miso
