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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "misobench/core_model.hpp"

namespace miso::cli {

/// CSV headers; these strings are part of the output contract.
inline constexpr std::string_view kFigure2Header = "snr_db,scheme,mi_bits,stderr_bits,trials";
inline constexpr std::string_view kFigure4Header = "m,delta_bits,delta_db";
inline constexpr std::string_view kFigure5Header = "snr_db,n_virtual,gap_bits,stderr_bits";
inline constexpr std::string_view kGapHeader = "snr_db,m,n_virtual,gap_bits,gap_db,abs_error_bound,method";
inline constexpr std::string_view kMiHeader = "snr_db,scheme,m,mi_bits,stderr_bits,trials";
inline constexpr std::string_view kNdoHeader = "scheme,m,snr_db,directions,max_pairwise_gap_bits,stderr_bits,pass";

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitNumerical = 3,
};

/// 10 significant digits; infinities print as "inf".
std::string format_double(double value);

/// "A:B:STEP" inclusive of B (within half a step of rounding).
std::vector<double> parse_snr_range(std::string_view text);
/// A number or the literal "inf".
double parse_snr_db(std::string_view text);
/// Comma-separated integers.
std::vector<int> parse_int_list(std::string_view text);

std::vector<double> default_snr_grid_db();

struct McOptions {
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    int workers = 0;
};

/// Adversarial channels for the TROMBI worst case: equal gains within one
/// TROMBI branch pair, equal gains on all antennas and a single active
/// antenna. Each is normalized to ||h||^2 = 4.
std::vector<ChannelVector> trombi_adversarial_channels();

struct Figure2Options {
    int m = 4;
    std::vector<double> snr_db = default_snr_grid_db();
    McOptions mc;
    int random_directions = 64;
};

/// Rows for OPT, IR_BF, IR_ABBA, IR_TROMBI, IR_BF_A and TROMBI_WC per SNR.
/// Diagnostics (the TROMBI worst-case grid, m != 4 warning) go to `log`.
void write_figure2(std::ostream &out, std::ostream &log, const Figure2Options &opt);

struct Figure4Options {
    std::vector<int> m_list;
};
std::vector<int> default_figure4_m_list();
void write_figure4(std::ostream &out, const Figure4Options &opt);

struct Figure5Options {
    int m = 8;
    std::vector<int> n_list{1, 2, 4, 8};
    std::vector<double> snr_db = default_snr_grid_db();
    McOptions mc;
};
/// Monte-Carlo gaps; the quadrature cross-check summary goes to `log`.
void write_figure5(std::ostream &out, std::ostream &log, const Figure5Options &opt);

struct GapOptions {
    std::vector<double> snr_db; // may hold +inf
    int m = 4;
    int n_virtual = 2;
};
void write_gap(std::ostream &out, const GapOptions &opt);

struct MiOptions {
    SchemeId scheme = SchemeId::ir_bf_a();
    int m = 4;
    std::vector<double> snr_db;
    McOptions mc;
    /// Real channel gains; empty means equal gains on every antenna.
    std::vector<double> channel;
};
void write_mi(std::ostream &out, const MiOptions &opt);

struct NdoOptions {
    SchemeId scheme = SchemeId::ir_bf_a();
    int m = 4;
    double snr_db = 10.0;
    int directions = 8;
    McOptions mc;
};
/// Returns the check verdict.
bool write_ndo(std::ostream &out, const NdoOptions &opt);

struct SelftestOptions {
    std::uint64_t seed = 0;
    int workers = 0;
    /// Drops the factor 2 of the IR-BF-A radius density; the normalization
    /// check must then fail.
    bool corrupt_prefactor = false;
};

struct SelftestResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<SelftestResult> run_selftest(const SelftestOptions &opt);
/// Prints the table and returns true iff every check passed.
bool write_selftest(std::ostream &out, const SelftestOptions &opt);

/// Full command-line entry point; returns the process exit code.
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace miso::cli
