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

#include "misobench/core_model.hpp"

#include <cmath>
#include <sstream>

#include "misobench/error.hpp"

namespace miso {

ChannelVector::ChannelVector(CVector coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.size() < 1)
        throw Error(ErrorKind::DomainError, "channel vector needs at least one antenna");
}

ChannelVector::ChannelVector(std::initializer_list<cdouble> coefficients)
    : ChannelVector(CVector::Map(coefficients.begin(), static_cast<Eigen::Index>(coefficients.size())))
{
}

bool ChannelVector::is_normalized(double rel_tol) const noexcept
{
    return std::abs(squared_norm() / m() - 1.0) <= rel_tol;
}

ChannelVector normalize_channel(const ChannelVector &h)
{
    const double norm = h.coefficients().norm();
    if (!(norm > 0.0))
        throw Error(ErrorKind::ZeroChannel, "cannot normalize the zero channel");
    return ChannelVector(h.coefficients() * (std::sqrt(static_cast<double>(h.m())) / norm));
}

void require_normalized(const ChannelVector &h, std::string_view context)
{
    if (!h.is_normalized()) {
        std::ostringstream os;
        os << context << " requires ||h||^2/M = 1, got " << h.squared_norm() / h.m();
        throw Error(ErrorKind::PreconditionViolation, os.str());
    }
}

SnrPoint::SnrPoint(double linear) : linear_(linear)
{
    if (!(linear >= 0.0))
        throw Error(ErrorKind::DomainError, "SNR must be nonnegative");
}

SnrPoint SnrPoint::from_db(double db)
{
    if (db == std::numeric_limits<double>::infinity())
        return infinity();
    return SnrPoint(std::pow(10.0, db / 10.0));
}

SnrPoint SnrPoint::infinity() noexcept
{
    SnrPoint p;
    p.linear_ = std::numeric_limits<double>::infinity();
    return p;
}

double SnrPoint::db() const noexcept
{
    return 10.0 * std::log10(linear_);
}

double finite_snr(SnrPoint snr, std::string_view context)
{
    if (snr.is_infinite())
        throw Error(ErrorKind::AsymptoticOnly, std::string(context) + " has no infinite-SNR form");
    return snr.linear();
}

SchemeId SchemeId::ir_ostbc(int n_virtual)
{
    if (n_virtual != 1 && n_virtual != 2 && n_virtual != 4 && n_virtual != 8)
        throw Error(ErrorKind::DomainError, "IR_OSTBC supports n_virtual in {1,2,4,8}");
    return {SchemeKind::IrOstbc, n_virtual};
}

int SchemeId::frame_columns() const noexcept
{
    switch (kind) {
    case SchemeKind::IrBf: return 1;
    case SchemeKind::IrBfA: return 2;
    case SchemeKind::IrAbba:
    case SchemeKind::IrTrombi: return 4;
    case SchemeKind::IrOstbc: return n_virtual;
    default: return 0;
    }
}

bool SchemeId::needs_phases() const noexcept
{
    return kind == SchemeKind::Trombi || kind == SchemeKind::IrTrombi;
}

bool SchemeId::is_randomized() const noexcept
{
    return frame_columns() > 0 || needs_phases();
}

std::string to_string(const SchemeId &id)
{
    switch (id.kind) {
    case SchemeKind::Opt: return "OPT";
    case SchemeKind::IrBf: return "IR_BF";
    case SchemeKind::Alamouti: return "ALAMOUTI";
    case SchemeKind::Abba: return "ABBA";
    case SchemeKind::IrAbba: return "IR_ABBA";
    case SchemeKind::Trombi: return "TROMBI";
    case SchemeKind::IrTrombi: return "IR_TROMBI";
    case SchemeKind::IrBfA: return "IR_BF_A";
    case SchemeKind::IrOstbc: return "IR_OSTBC" + std::to_string(id.n_virtual);
    }
    return "UNKNOWN";
}

std::optional<SchemeId> parse_scheme(std::string_view name)
{
    if (name == "OPT") return SchemeId::opt();
    if (name == "IR_BF") return SchemeId::ir_bf();
    if (name == "ALAMOUTI") return SchemeId::alamouti();
    if (name == "ABBA") return SchemeId::abba();
    if (name == "IR_ABBA") return SchemeId::ir_abba();
    if (name == "TROMBI") return SchemeId::trombi();
    if (name == "IR_TROMBI") return SchemeId::ir_trombi();
    if (name == "IR_BF_A") return SchemeId::ir_bf_a();
    constexpr std::string_view prefix = "IR_OSTBC";
    if (name.starts_with(prefix)) {
        const auto rest = name.substr(prefix.size());
        for (int n : {1, 2, 4, 8})
            if (rest == std::to_string(n))
                return SchemeId::ir_ostbc(n);
    }
    return std::nullopt;
}

double bits_to_db(double gap_bits)
{
    if (gap_bits < 0.0)
        throw Error(ErrorKind::NegativeGap, "gap in bits must be nonnegative");
    return gap_bits * kDbPerBit;
}

} // namespace miso
