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

#include <optional>
#include <utility>

#include "misobench/core_model.hpp"
#include "misobench/ensembles.hpp"

namespace miso {

enum class EvcmKind { Alamouti, Abba, Trombi, Generic };

/// Equivalent virtual channel matrix of a linear space-time modulation:
/// stacked (conjugated) receive samples = H x + n.
class Evcm {
public:
    Evcm(CMatrix matrix, EvcmKind kind);

    const CMatrix &matrix() const noexcept { return matrix_; }
    EvcmKind kind() const noexcept { return kind_; }
    int size() const noexcept { return static_cast<int>(matrix_.rows()); }
    CMatrix gram() const { return matrix_.adjoint() * matrix_; }

private:
    CMatrix matrix_;
    EvcmKind kind_;
};

/// Per-block randomization: the beamforming frame B (IR_* schemes) and the
/// TROMBI phase pair.
struct SchemeDraw {
    std::optional<OrthonormalFrame> frame;
    std::optional<std::pair<double, double>> phases;
};

struct Rational {
    int num = 1;
    int den = 1;

    double value() const noexcept { return static_cast<double>(num) / den; }
    friend bool operator==(const Rational &, const Rational &) = default;
};

/// log2(1 + snr), the white-input benchmark under ||h||^2/M = 1.
double opt_mi(SnrPoint snr);

/// (1/sqrt2) [g1 g2; -g2* g1*]
Evcm alamouti_evcm(const Eigen::Vector2cd &g);
double alamouti_mi(SnrPoint snr, const Eigen::Vector2cd &g);

/// 4x4 ABBA EVCM with the 1/2 factor. diag(H^H H) = ||g||^2/4 for every g.
Evcm abba_evcm(const Eigen::Vector4cd &g);

/// Per-symbol SNR of the unbiased linear MMSE estimate,
/// 1 / {(H^H H snr + I)^-1}_11 - 1.
///
/// Every diagonal entry of the inverse is obtained by Cholesky solves; they
/// must agree to 1e-10 relative or NonUniformSnr is thrown.
double mmse_unbiased_snr(const Evcm &evcm, SnrPoint snr);

double abba_mi(SnrPoint snr, const Eigen::Vector4cd &g);

/// ((g1 + g2 e^{j th1}) / sqrt2, (g3 + g4 e^{j th2}) / sqrt2)
Eigen::Vector2cd trombi_effective_channel(const Eigen::Vector4cd &g, double theta1, double theta2);
double trombi_instant_mi(SnrPoint snr, const Eigen::Vector4cd &g, double theta1, double theta2);

/// Maximal complex orthogonal design rate (k+1)/(2k), k = ceil(n/2), reduced.
Rational ostbc_max_rate(int n_virtual);

/// h_tilde_i = h^T b_i for every frame column.
CVector project_channel(const ChannelVector &h, const OrthonormalFrame &frame);

/// Two-column frame that folds the TROMBI phases into a four-column frame:
/// ((b1 + b2 e^{j th1}) / sqrt2, (b3 + b4 e^{j th2}) / sqrt2).
OrthonormalFrame trombi_folded_frame(const OrthonormalFrame &frame, double theta1, double theta2);

/// Instantaneous mutual information (bits/symbol) of any scheme for one draw.
///
/// Requires a normalized h. Deterministic schemes ignore the draw except
/// TROMBI, which needs phases; IR_* schemes need a frame with exactly
/// `scheme.frame_columns()` columns (DrawMismatch otherwise). ALAMOUTI needs
/// M = 2 and ABBA / TROMBI need M = 4.
double instant_mi(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, const SchemeDraw &draw);

/// instant_mi restricted to the randomized-beamforming family.
double ir_instant_mi(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, const SchemeDraw &draw);

} // namespace miso
