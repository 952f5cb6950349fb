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

#include <stdexcept>
#include <string>
#include <string_view>

namespace miso {

enum class ErrorKind {
    ZeroChannel,
    NegativeGap,
    FrameTooLarge,
    DegenerateProjection,
    DomainError,
    AsymptoticOnly,
    NonUniformSnr,
    DrawMismatch,
    PreconditionViolation,
    QuadratureFailure,
    DivergentGap,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for kinds that signal a numerical breakdown rather than bad input.
bool is_numerical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace miso
