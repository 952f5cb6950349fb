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

#include <functional>
#include <span>

namespace miso {

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    int subdivisions = 0;
};

/// Adaptive Gauss-Legendre quadrature: 7-point Gauss rule with its 15-point
/// Kronrod extension for the local error, bisecting the worst interval
/// first. Nodes never touch the endpoints, so integrable endpoint
/// singularities (log u, u^-1/2) are fine.
struct Quadrature {
    double abs_tol = 1e-10;
    int max_subdivisions = 2000;

    /// Throws QuadratureFailure if the error budget is not met.
    QuadratureResult integrate(const std::function<double(double)> &f, double a, double b) const;

    /// Integrates piecewise over consecutive breakpoints, splitting abs_tol
    /// evenly between pieces. Breakpoints must be ascending.
    QuadratureResult integrate(const std::function<double(double)> &f, std::span<const double> breakpoints) const;
};

/// Single adaptive integral with the default rule.
QuadratureResult integrate_finite(const std::function<double(double)> &f, double a, double b, double tol);

} // namespace miso
