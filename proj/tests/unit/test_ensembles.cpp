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

#include "misobench/ensembles.hpp"
#include "misobench/error.hpp"
#include "misobench/montecarlo.hpp"
#include "misobench/quadrature.hpp"
#include "misobench/stats.hpp"
#include "oracles.hpp"

using namespace miso;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("sample_haar_frame shapes and orthonormality", "[ensembles]")
{
    const auto scalar = sample_haar_frame(1, 1, RngStream{5, 0});
    CHECK_THAT(std::abs(scalar.columns()(0, 0)), WithinAbs(1.0, 1e-15));

    std::uint64_t index = 0;
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= m; ++n)
            for (int rep = 0; rep < 20; ++rep) {
                const auto frame = sample_haar_frame(m, n, RngStream{17, index++});
                REQUIRE(frame.m() == m);
                REQUIRE(frame.n() == n);
                CHECK(frame.orthonormality_error() <= 1e-10);
            }

    const auto f = sample_haar_frame(4, 2, RngStream{1, 2});
    CHECK_THAT(f.column(0).norm(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(f.column(1).norm(), WithinAbs(1.0, 1e-12));
    CHECK(std::abs(f.column(0).dot(f.column(1))) <= 1e-10);

    try {
        sample_haar_frame(3, 4, RngStream{});
        FAIL("expected FrameTooLarge");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::FrameTooLarge);
    }
}

TEST_CASE("sample_haar_frame is deterministic per stream", "[ensembles]")
{
    const auto a = sample_haar_frame(6, 3, RngStream{42, 9});
    const auto b = sample_haar_frame(6, 3, RngStream{42, 9});
    const auto c = sample_haar_frame(6, 3, RngStream{42, 10});
    CHECK(a.columns() == b.columns());
    CHECK(a.columns() != c.columns());
}

TEST_CASE("beamforming is isotropic: E|h^T b1|^2 = ||h||^2 / M", "[ensembles][statistical]")
{
    const int m = 4;
    const ChannelVector h({2.0, 0.0, cdouble(0.0, 0.0), 0.0});
    RunningStats stats;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const auto frame = sample_haar_frame(m, 1, RngStream{2024, i});
        stats.push(std::norm(frame.columns().col(0).dot(h.coefficients().conjugate())));
    }
    CHECK(std::abs(stats.mean() - 1.0) <= 3.0 * stats.standard_error());
}

TEST_CASE("Haar frames are left-invariant", "[ensembles][statistical]")
{
    // |(U b1)_1|^2 and |(b1)_1|^2 must both follow Beta(1, M-1) for a fixed
    // unitary U (here the normalized DFT).
    const int m = 5;
    CMatrix dft(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            dft(r, c) = std::polar(1.0 / std::sqrt(m), -2.0 * std::numbers::pi * r * c / m);

    std::vector<double> plain, rotated;
    for (std::uint64_t i = 0; i < 20000; ++i) {
        const CVector b = sample_haar_frame(m, 1, RngStream{77, i}).columns().col(0);
        plain.push_back(std::norm(b(0)));
        rotated.push_back(std::norm((dft * b)(0)));
    }
    auto cdf = [m](double v) { return projection_radius_sq_cdf(v, m, 1); };
    const double crit = ks_critical_value(0.01, 20000);
    CHECK(ks_statistic(plain, cdf) <= crit);
    CHECK(ks_statistic(rotated, cdf) <= crit);
}

TEST_CASE("projection_radius_pdf closed forms", "[ensembles]")
{
    for (double u : {0.0, 0.1, 0.5, 0.9, 1.0})
        CHECK_THAT(projection_radius_pdf(u, 3, 2), WithinAbs(4.0 * u * u * u, 1e-13));

    for (int m = 3; m <= 12; ++m)
        for (double u : {0.05, 0.3, 0.7, 0.95}) {
            const double expected = 2.0 * (m - 1) * (m - 2) * std::pow(u, 3) * std::pow(1.0 - u * u, m - 3);
            CHECK_THAT(projection_radius_pdf(u, m, 2), WithinRel(expected, 1e-12));
        }

    // Real-dimension form with M=6, N=4 is the same density.
    CHECK_THAT(detail::real_projection_pdf(0.4, 6, 4), WithinRel(projection_radius_pdf(0.4, 3, 2), 1e-14));

    try {
        projection_radius_pdf(0.5, 4, 4);
        FAIL("expected DegenerateProjection");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DegenerateProjection);
    }
    try {
        projection_radius_pdf(1.5, 4, 2);
        FAIL("expected DomainError");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DomainError);
    }
}

TEST_CASE("projection pdf normalization and moments", "[ensembles][property]")
{
    for (int m = 3; m <= 16; ++m)
        for (int n : {1, 2, 4}) {
            if (n >= m)
                continue;
            auto pdf = [=](double u) { return projection_radius_pdf(u, m, n); };
            const auto mass = integrate_finite(pdf, 0.0, 1.0, 1e-13);
            const auto moment = integrate_finite([&](double u) { return u * u * pdf(u); }, 0.0, 1.0, 1e-13);
            CHECK_THAT(mass.value, WithinAbs(1.0, 1e-10));
            CHECK_THAT(moment.value, WithinAbs(static_cast<double>(n) / m, 1e-10));
        }
    // Independent Simpson check of the n = 2 normalization at M = 8.
    const double simpson =
        testing::simpson([](double u) { return projection_radius_pdf(u, 8, 2); }, 0.0, 1.0, 4000);
    CHECK_THAT(simpson, WithinAbs(1.0, 1e-10));
}

TEST_CASE("projection_radius_sq_cdf matches the integrated density", "[ensembles]")
{
    for (int m : {3, 5, 8, 13})
        for (int n : {1, 2, 4}) {
            if (n >= m)
                continue;
            for (double v : {0.01, 0.2, 0.5, 0.8}) {
                const auto r = integrate_finite([=](double x) { return projection_radius_sq_pdf(x, m, n); }, 0.0, v,
                                                1e-13);
                CHECK_THAT(projection_radius_sq_cdf(v, m, n), WithinAbs(r.value, 1e-11));
            }
        }
    CHECK(projection_radius_sq_cdf(0.3, 4, 4) == 0.0);
    CHECK(projection_radius_sq_cdf(1.0, 4, 4) == 1.0);
}

TEST_CASE("sample_projection_radius_sq", "[ensembles][statistical]")
{
    CHECK(sample_projection_radius_sq(5, 5, RngStream{1, 1}) == 1.0);

    std::vector<double> gamma_draws, frame_draws;
    RunningStats mean;
    const int trials = 100000;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double v = sample_projection_radius_sq(8, 2, RngStream{99, i});
        gamma_draws.push_back(v);
        mean.push(v);
    }
    CHECK(std::abs(mean.mean() - 2.0 / 8.0) <= 3.0 * mean.standard_error());

    auto cdf = [](double v) { return projection_radius_sq_cdf(v, 8, 2); };
    std::vector<double> copy = gamma_draws;
    CHECK(ks_statistic(copy, cdf) <= 0.006);

    // r^2 = |hbar^T b1|^2 + |hbar^T b2|^2 from full Haar frames.
    const ChannelVector hbar({1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    for (std::uint64_t i = 0; i < trials; ++i) {
        const auto frame = sample_haar_frame(8, 2, RngStream{123, i});
        frame_draws.push_back((frame.columns().transpose() * hbar.coefficients()).squaredNorm());
    }
    CHECK(ks_statistic_two_sample(gamma_draws, frame_draws) <= ks_critical_value(0.01, trials, trials));
}
