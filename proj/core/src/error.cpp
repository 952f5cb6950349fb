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

#include "misobench/error.hpp"

namespace miso {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ZeroChannel: return "ZeroChannel";
    case ErrorKind::NegativeGap: return "NegativeGap";
    case ErrorKind::FrameTooLarge: return "FrameTooLarge";
    case ErrorKind::DegenerateProjection: return "DegenerateProjection";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::AsymptoticOnly: return "AsymptoticOnly";
    case ErrorKind::NonUniformSnr: return "NonUniformSnr";
    case ErrorKind::DrawMismatch: return "DrawMismatch";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::DivergentGap: return "DivergentGap";
    }
    return "Unknown";
}

bool is_numerical(ErrorKind kind) noexcept
{
    return kind == ErrorKind::QuadratureFailure || kind == ErrorKind::NonUniformSnr;
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

} // namespace miso
