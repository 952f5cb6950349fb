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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "misobench/error.hpp"
#include "misobench/quadrature.hpp"

using namespace miso;
using Catch::Matchers::WithinAbs;

TEST_CASE("polynomials are integrated exactly", "[quadrature]")
{
    CHECK_THAT(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 1e-12).value, WithinAbs(1.0, 1e-12));
    CHECK_THAT(integrate_finite([](double u) { return 4.0 * u * u * u; }, 0.0, 1.0, 1e-12).value,
               WithinAbs(1.0, 1e-12));
    // Degree 13 is inside the Kronrod exactness range.
    const auto r = integrate_finite([](double u) { return 14.0 * std::pow(u, 13); }, 0.0, 1.0, 1e-12);
    CHECK_THAT(r.value, WithinAbs(1.0, 1e-13));
}

TEST_CASE("smooth and singular integrands", "[quadrature]")
{
    const auto s = integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12);
    CHECK_THAT(s.value, WithinAbs(2.0, 1e-12));
    CHECK(s.error_bound <= 1e-12);

    const auto g = integrate_finite([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-12);
    CHECK_THAT(g.value, WithinAbs(std::sqrt(std::numbers::pi), 1e-11));

    // Endpoint singularities.
    CHECK_THAT(integrate_finite([](double u) { return std::log(u); }, 0.0, 1.0, 1e-10).value, WithinAbs(-1.0, 1e-9));
    CHECK_THAT(integrate_finite([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0, 1e-8).value,
               WithinAbs(2.0, 1e-7));
}

TEST_CASE("second moment of a projection-radius density", "[quadrature]")
{
    // 2 (M-1)(M-2) u^3 (1-u^2)^(M-3) with M = 6; E[u^2] = 2/6.
    const int m = 6;
    auto pdf = [=](double u) { return 2.0 * (m - 1) * (m - 2) * u * u * u * std::pow(1.0 - u * u, m - 3); };
    CHECK_THAT(integrate_finite(pdf, 0.0, 1.0, 1e-12).value, WithinAbs(1.0, 1e-12));
    CHECK_THAT(integrate_finite([&](double u) { return u * u * pdf(u); }, 0.0, 1.0, 1e-12).value,
               WithinAbs(2.0 / 6.0, 1e-12));
}

TEST_CASE("breakpoint integration", "[quadrature]")
{
    const std::vector<double> points{0.0, 0.25, 0.5, 1.0, 2.0};
    Quadrature rule;
    rule.abs_tol = 1e-12;
    const auto r = rule.integrate([](double x) { return std::abs(x - 0.5); }, points);
    // int_0^2 |x - 1/2| = 1/8 + 9/8
    CHECK_THAT(r.value, WithinAbs(1.25, 1e-12));

    const std::vector<double> bad{0.0, 1.0, 0.5};
    CHECK_THROWS_AS(rule.integrate([](double x) { return x; }, bad), Error);
}

TEST_CASE("an unmet budget raises QuadratureFailure", "[quadrature]")
{
    Quadrature rule;
    rule.abs_tol = 1e-14;
    rule.max_subdivisions = 3;
    try {
        rule.integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0);
        FAIL("expected QuadratureFailure");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::QuadratureFailure);
        CHECK(is_numerical(e.kind()));
    }
}
