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

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace miso {

using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Physical MISO channel h (one complex gain per transmit antenna).
///
/// Instances are accepted unnormalized. Operations that rely on the
/// convention ||h||^2 / M = 1 check it with `is_normalized()` and reject
/// raw vectors with PreconditionViolation.
class ChannelVector {
public:
    explicit ChannelVector(CVector coefficients);
    ChannelVector(std::initializer_list<cdouble> coefficients);

    const CVector &coefficients() const noexcept { return coeffs_; }
    int m() const noexcept { return static_cast<int>(coeffs_.size()); }
    double squared_norm() const noexcept { return coeffs_.squaredNorm(); }

    /// ||h||^2 / M == 1 to within `rel_tol`.
    bool is_normalized(double rel_tol = 1e-9) const noexcept;

    cdouble operator[](int i) const { return coeffs_(i); }

private:
    CVector coeffs_;
};

/// Returns h scaled by sqrt(M)/||h||. Throws ZeroChannel for h = 0.
ChannelVector normalize_channel(const ChannelVector &h);

/// Throws PreconditionViolation unless ||h||^2 / M == 1.
void require_normalized(const ChannelVector &h, std::string_view context);

/// Linear SNR (eps_s / N0). May hold +inf for asymptotic evaluations.
class SnrPoint {
public:
    constexpr SnrPoint() = default;
    explicit SnrPoint(double linear);

    static SnrPoint from_db(double db);
    static SnrPoint infinity() noexcept;

    double linear() const noexcept { return linear_; }
    double db() const noexcept;
    bool is_infinite() const noexcept { return linear_ == std::numeric_limits<double>::infinity(); }

private:
    double linear_ = 0.0;
};

/// Throws AsymptoticOnly when `snr` is the infinite marker.
double finite_snr(SnrPoint snr, std::string_view context);

struct MiEstimate {
    double mean_bits = 0.0;
    double stderr_bits = 0.0;
    std::int64_t trials = 0;
};

enum class SchemeKind {
    Opt,
    IrBf,
    Alamouti,
    Abba,
    IrAbba,
    Trombi,
    IrTrombi,
    IrBfA,
    IrOstbc,
};

struct SchemeId {
    SchemeKind kind = SchemeKind::Opt;
    int n_virtual = 0; // IrOstbc only

    static constexpr SchemeId opt() { return {SchemeKind::Opt, 0}; }
    static constexpr SchemeId ir_bf() { return {SchemeKind::IrBf, 0}; }
    static constexpr SchemeId alamouti() { return {SchemeKind::Alamouti, 0}; }
    static constexpr SchemeId abba() { return {SchemeKind::Abba, 0}; }
    static constexpr SchemeId ir_abba() { return {SchemeKind::IrAbba, 0}; }
    static constexpr SchemeId trombi() { return {SchemeKind::Trombi, 0}; }
    static constexpr SchemeId ir_trombi() { return {SchemeKind::IrTrombi, 0}; }
    static constexpr SchemeId ir_bf_a() { return {SchemeKind::IrBfA, 0}; }
    /// n_virtual in {1, 2, 4, 8}.
    static SchemeId ir_ostbc(int n_virtual);

    /// Number of frame columns a per-block draw must carry (0 if none).
    int frame_columns() const noexcept;
    bool needs_phases() const noexcept;
    bool is_randomized() const noexcept;

    friend bool operator==(const SchemeId &, const SchemeId &) = default;
};

/// Names as used on the command line and in CSV output, e.g. "IR_BF_A",
/// "IR_OSTBC4".
std::string to_string(const SchemeId &id);
std::optional<SchemeId> parse_scheme(std::string_view name);

/// 10*log10(2) dB per bit.
inline constexpr double kDbPerBit = 3.0102999566398119521;

/// High-SNR conversion of a rate gap to a power gap. Throws NegativeGap.
double bits_to_db(double gap_bits);

} // namespace miso
