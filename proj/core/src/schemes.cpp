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

#include "misobench/schemes.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "misobench/error.hpp"

namespace miso {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double log2_1p(double x)
{
    return std::log1p(x) / std::numbers::ln2;
}

cdouble unit_phase(double theta)
{
    return {std::cos(theta), std::sin(theta)};
}

void require_m(const ChannelVector &h, int m, const SchemeId &scheme)
{
    if (h.m() != m) {
        std::ostringstream os;
        os << to_string(scheme) << " needs M = " << m << ", got M = " << h.m();
        throw Error(ErrorKind::DomainError, os.str());
    }
}

const std::pair<double, double> &require_phases(const SchemeDraw &draw, const SchemeId &scheme)
{
    if (!draw.phases)
        throw Error(ErrorKind::DrawMismatch, to_string(scheme) + " needs a phase pair");
    return *draw.phases;
}

const OrthonormalFrame &require_frame(const SchemeDraw &draw, const SchemeId &scheme, int m)
{
    const int want = scheme.frame_columns();
    if (!draw.frame || draw.frame->n() != want || draw.frame->m() != m) {
        std::ostringstream os;
        os << to_string(scheme) << " needs a " << m << "x" << want << " frame";
        if (draw.frame)
            os << ", got " << draw.frame->m() << "x" << draw.frame->n();
        throw Error(ErrorKind::DrawMismatch, os.str());
    }
    return *draw.frame;
}

} // namespace

Evcm::Evcm(CMatrix matrix, EvcmKind kind) : matrix_(std::move(matrix)), kind_(kind)
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
        throw Error(ErrorKind::DomainError, "EVCM must be a nonempty square matrix");
}

double opt_mi(SnrPoint snr)
{
    return log2_1p(finite_snr(snr, "opt_mi"));
}

Evcm alamouti_evcm(const Eigen::Vector2cd &g)
{
    CMatrix h(2, 2);
    h << g(0), g(1),
        -std::conj(g(1)), std::conj(g(0));
    return Evcm(h * kInvSqrt2, EvcmKind::Alamouti);
}

double alamouti_mi(SnrPoint snr, const Eigen::Vector2cd &g)
{
    const double s = finite_snr(snr, "alamouti_mi");
    return log2_1p(s * g.squaredNorm() / 2.0);
}

Evcm abba_evcm(const Eigen::Vector4cd &g)
{
    const cdouble h1 = g(0), h2 = g(1), h3 = g(2), h4 = g(3);
    CMatrix h(4, 4);
    h << h1, h2, h3, h4,
        -std::conj(h2), std::conj(h1), -std::conj(h4), std::conj(h3),
        h3, h4, h1, h2,
        -std::conj(h4), std::conj(h3), -std::conj(h2), std::conj(h1);
    return Evcm(h * 0.5, EvcmKind::Abba);
}

double mmse_unbiased_snr(const Evcm &evcm, SnrPoint snr)
{
    const double s = finite_snr(snr, "mmse_unbiased_snr");
    const int k = evcm.size();
    const CMatrix system = evcm.gram() * s + CMatrix::Identity(k, k);
    const Eigen::LLT<CMatrix> chol(system);
    if (chol.info() != Eigen::Success)
        throw Error(ErrorKind::NonUniformSnr, "MMSE system is not positive definite");
    const CMatrix inverse = chol.solve(CMatrix::Identity(k, k));

    const double first = inverse(0, 0).real();
    for (int i = 1; i < k; ++i) {
        const double d = inverse(i, i).real();
        if (std::abs(d - first) > 1e-10 * std::abs(first)) {
            std::ostringstream os;
            os << "MMSE error diagonal differs between symbols 1 and " << i + 1 << " (" << first << " vs " << d
               << ")";
            throw Error(ErrorKind::NonUniformSnr, os.str());
        }
    }
    return 1.0 / first - 1.0;
}

double abba_mi(SnrPoint snr, const Eigen::Vector4cd &g)
{
    return log2_1p(mmse_unbiased_snr(abba_evcm(g), snr));
}

Eigen::Vector2cd trombi_effective_channel(const Eigen::Vector4cd &g, double theta1, double theta2)
{
    return {(g(0) + g(1) * unit_phase(theta1)) * kInvSqrt2, (g(2) + g(3) * unit_phase(theta2)) * kInvSqrt2};
}

double trombi_instant_mi(SnrPoint snr, const Eigen::Vector4cd &g, double theta1, double theta2)
{
    return alamouti_mi(snr, trombi_effective_channel(g, theta1, theta2));
}

Rational ostbc_max_rate(int n_virtual)
{
    if (n_virtual < 1)
        throw Error(ErrorKind::DomainError, "OSTBC needs at least one antenna");
    const int half = (n_virtual + 1) / 2;
    Rational r{half + 1, 2 * half};
    const int g = std::gcd(r.num, r.den);
    return {r.num / g, r.den / g};
}

CVector project_channel(const ChannelVector &h, const OrthonormalFrame &frame)
{
    if (frame.m() != h.m())
        throw Error(ErrorKind::DrawMismatch, "frame dimension does not match the channel");
    return frame.columns().transpose() * h.coefficients();
}

OrthonormalFrame trombi_folded_frame(const OrthonormalFrame &frame, double theta1, double theta2)
{
    if (frame.n() != 4)
        throw Error(ErrorKind::DrawMismatch, "TROMBI folding needs a four-column frame");
    CMatrix folded(frame.m(), 2);
    folded.col(0) = (frame.column(0) + frame.column(1) * unit_phase(theta1)) * kInvSqrt2;
    folded.col(1) = (frame.column(2) + frame.column(3) * unit_phase(theta2)) * kInvSqrt2;
    return OrthonormalFrame(std::move(folded));
}

double instant_mi(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, const SchemeDraw &draw)
{
    require_normalized(h, to_string(scheme));
    const double s = finite_snr(snr, to_string(scheme));

    switch (scheme.kind) {
    case SchemeKind::Opt:
        return opt_mi(snr);
    case SchemeKind::Alamouti:
        require_m(h, 2, scheme);
        return alamouti_mi(snr, h.coefficients().head<2>());
    case SchemeKind::Abba:
        require_m(h, 4, scheme);
        return abba_mi(snr, h.coefficients().head<4>());
    case SchemeKind::Trombi: {
        require_m(h, 4, scheme);
        const auto &[t1, t2] = require_phases(draw, scheme);
        return trombi_instant_mi(snr, h.coefficients().head<4>(), t1, t2);
    }
    default:
        break;
    }

    const OrthonormalFrame &frame = require_frame(draw, scheme, h.m());
    const CVector projected = project_channel(h, frame);

    switch (scheme.kind) {
    case SchemeKind::IrBf:
        return log2_1p(s * std::norm(projected(0)));
    case SchemeKind::IrBfA:
        return log2_1p(s * projected.squaredNorm() / 2.0);
    case SchemeKind::IrAbba:
        return abba_mi(snr, projected.head<4>());
    case SchemeKind::IrTrombi: {
        const auto &[t1, t2] = require_phases(draw, scheme);
        return trombi_instant_mi(snr, projected.head<4>(), t1, t2);
    }
    case SchemeKind::IrOstbc: {
        const double rate = ostbc_max_rate(scheme.n_virtual).value();
        return rate * log2_1p(s * projected.squaredNorm() / (scheme.n_virtual * rate));
    }
    default:
        throw Error(ErrorKind::DomainError, "unhandled scheme " + to_string(scheme));
    }
}

double ir_instant_mi(const SchemeId &scheme, const ChannelVector &h, SnrPoint snr, const SchemeDraw &draw)
{
    if (scheme.frame_columns() == 0)
        throw Error(ErrorKind::DrawMismatch, to_string(scheme) + " is not a randomized-beamforming scheme");
    return instant_mi(scheme, h, snr, draw);
}

} // namespace miso
