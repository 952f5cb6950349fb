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

#include "misobench/analysis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "misobench/ensembles.hpp"
#include "misobench/error.hpp"
#include "misobench/schemes.hpp"
#include "misobench/special.hpp"

namespace miso {

namespace {

constexpr double kQuadTol = 1e-11;
constexpr double kLimitZMax = 50.0;

double log2_1p(double x)
{
    return std::log1p(x) / std::numbers::ln2;
}

void require_m_at_least_two(int m)
{
    if (m < 2) {
        std::ostringstream os;
        os << "gap needs M >= 2, got " << m;
        throw Error(ErrorKind::DomainError, os.str());
    }
}

// (M-1)(M-2) v (1-v)^(M-3), the IR-BF-A density of v = r^2.
double radius_sq_density(double v, int m)
{
    const double prefactor = static_cast<double>(m - 1) * static_cast<double>(m - 2);
    if (m == 3)
        return prefactor * v;
    if (v >= 1.0)
        return 0.0;
    return prefactor * v * std::exp((m - 3) * std::log1p(-v));
}

QuadratureResult radius_sq_expectation(const std::function<double(double)> &g, int m)
{
    const auto points = detail::clustered_breakpoints(2.0 / m, 1.0, 40);
    Quadrature rule;
    rule.abs_tol = kQuadTol;
    return rule.integrate([&](double v) { return g(v) * radius_sq_density(v, m); }, points);
}

// Clamp rounding-level negatives so the dB conversion stays defined.
double clamp_small_negative(double value, double error)
{
    if (value < 0.0 && value >= -(error + 1e-14))
        return 0.0;
    return value;
}

} // namespace

std::string_view to_string(GapMethod method) noexcept
{
    switch (method) {
    case GapMethod::Quadrature: return "quadrature";
    case GapMethod::MonteCarlo: return "monte_carlo";
    case GapMethod::AnalyticLimit: return "analytic_limit";
    }
    return "unknown";
}

GapValue make_gap(double gap_bits, GapMethod method, double abs_error_bound)
{
    // Monte-Carlo gaps may dip below zero by noise; keep the sign in dB.
    const double db = gap_bits >= 0.0 ? bits_to_db(gap_bits) : gap_bits * kDbPerBit;
    return {gap_bits, db, method, abs_error_bound};
}

namespace detail {

std::vector<double> clustered_breakpoints(double scale, double upper, int below)
{
    std::vector<double> points{0.0};
    for (int k = -below; ; ++k) {
        const double p = std::ldexp(scale, k);
        if (p >= upper)
            break;
        points.push_back(p);
    }
    points.push_back(upper);
    return points;
}

QuadratureResult beta_expectation(const std::function<double(double)> &g, int m, int n, double abs_tol)
{
    const double log_norm = projection_radius_sq_log_norm(m, n);
    const int a = n - 1;
    const int b = m - n - 1;
    auto density = [=](double v) {
        if ((v <= 0.0 && a > 0) || (v >= 1.0 && b > 0))
            return 0.0;
        double lv = log_norm;
        if (a > 0)
            lv += a * std::log(v);
        if (b > 0)
            lv += b * std::log1p(-v);
        return std::exp(lv);
    };
    const auto points = clustered_breakpoints(static_cast<double>(n) / m, 1.0, 40);
    Quadrature rule;
    rule.abs_tol = abs_tol;
    return rule.integrate([&](double v) { return g(v) * density(v); }, points);
}

} // namespace detail

double ir_bf_a_radius_pdf(double u, int m)
{
    if (m < 3)
        throw Error(ErrorKind::DegenerateProjection, "M = 2 projects onto the whole space");
    if (!(u >= 0.0 && u <= 1.0))
        throw Error(ErrorKind::DomainError, "projection length must lie in [0, 1]");
    // f_r(u) du = f_v(u^2) 2u du
    return 2.0 * u * radius_sq_density(u * u, m);
}

GapValue gap_closed_form(SnrPoint snr, int m)
{
    require_m_at_least_two(m);
    if (snr.is_infinite())
        return gap_asymptotic(m);
    const double s = snr.linear();
    if (m == 2 || s == 0.0)
        return make_gap(0.0, GapMethod::Quadrature, 0.0);

    const double opt = std::log1p(s);
    const double half_ms = 0.5 * m * s;
    const auto r = radius_sq_expectation(
        [=](double v) { return (opt - std::log1p(half_ms * v)) / std::numbers::ln2; }, m);
    return make_gap(clamp_small_negative(r.value, r.error_bound), GapMethod::Quadrature, r.error_bound);
}

GapValue gap_asymptotic(int m)
{
    require_m_at_least_two(m);
    if (m == 2)
        return make_gap(0.0, GapMethod::Quadrature, 0.0);
    const double log_two_over_m = std::log(2.0 / m);
    const auto r = radius_sq_expectation(
        [=](double v) { return (log_two_over_m - std::log(v)) / std::numbers::ln2; }, m);
    return make_gap(clamp_small_negative(r.value, r.error_bound), GapMethod::Quadrature, r.error_bound);
}

GapValue gap_limit_virtual(int n_virtual)
{
    if (n_virtual != 1 && n_virtual != 2)
        throw Error(ErrorKind::DivergentGap,
                    "only full-rate projections (n = 1, 2) have a finite high-SNR gap");
    const double n = n_virtual;
    const double closed = std::log2(n) - special::digamma(n) / std::numbers::ln2;

    // Independent route: truncated integral in z = M r^2 as M -> infinity.
    const double log_gamma_n = special::log_gamma(n);
    auto integrand = [=](double z) {
        return std::log2(n / z) * std::exp((n - 1.0) * std::log(z) - z - log_gamma_n);
    };
    const auto points = detail::clustered_breakpoints(1.0, kLimitZMax, 40);
    Quadrature rule;
    rule.abs_tol = 1e-10;
    const auto r = rule.integrate(integrand, points);
    const double tail = (kLimitZMax + 1.0) * std::exp(-kLimitZMax) * std::log2(kLimitZMax);
    const double mismatch = std::abs(r.value - closed);
    if (mismatch > 1e-6) {
        std::ostringstream os;
        os << "digamma limit " << closed << " disagrees with integral " << r.value;
        throw Error(ErrorKind::QuadratureFailure, os.str());
    }
    return make_gap(closed, GapMethod::AnalyticLimit, mismatch + r.error_bound + tail);
}

GapValue gap_general(SnrPoint snr, int m, int n_virtual)
{
    if (n_virtual < 1 || n_virtual > m) {
        std::ostringstream os;
        os << "need 1 <= n_virtual <= M, got n = " << n_virtual << ", M = " << m;
        throw Error(ErrorKind::DomainError, os.str());
    }
    const double rate = ostbc_max_rate(n_virtual).value();
    const double scale = static_cast<double>(m) / n_virtual;

    if (snr.is_infinite()) {
        if (rate < 1.0)
            throw Error(ErrorKind::DivergentGap, "rate-loss schemes have an unbounded high-SNR gap");
        if (n_virtual == m)
            return make_gap(0.0, GapMethod::Quadrature, 0.0);
        const double log_n_over_m = std::log(1.0 / scale);
        const auto r = detail::beta_expectation(
            [=](double v) { return (log_n_over_m - std::log(v)) / std::numbers::ln2; }, m, n_virtual, kQuadTol);
        return make_gap(clamp_small_negative(r.value, r.error_bound), GapMethod::Quadrature, r.error_bound);
    }

    const double s = snr.linear();
    const double opt = log2_1p(s);
    if (n_virtual == m) {
        const double gap = opt - rate * log2_1p(s / rate);
        return make_gap(clamp_small_negative(gap, 1e-15), GapMethod::Quadrature, 0.0);
    }
    const auto r = detail::beta_expectation(
        [=](double v) { return opt - rate * log2_1p(s * scale * v / rate); }, m, n_virtual, kQuadTol);
    return make_gap(clamp_small_negative(r.value, r.error_bound), GapMethod::Quadrature, r.error_bound);
}

MonotonicityReport verify_monotonicity(int m, std::span<const double> snr_grid_db)
{
    require_m_at_least_two(m);
    MonotonicityReport report;
    report.asymptotic_bits = gap_asymptotic(m).gap_bits;
    for (double db : snr_grid_db) {
        report.snr_db.push_back(db);
        report.gap_bits.push_back(gap_closed_form(SnrPoint::from_db(db), m).gap_bits);
    }
    for (std::size_t i = 0; i + 1 < report.gap_bits.size(); ++i) {
        if (report.snr_db[i + 1] < report.snr_db[i])
            throw Error(ErrorKind::DomainError, "SNR grid must be ascending");
        const double drop = report.gap_bits[i] - report.gap_bits[i + 1];
        report.max_drop = i == 0 ? drop : std::max(report.max_drop, drop);
        if (drop > 1e-9)
            report.pass = false;
    }
    if (!report.gap_bits.empty() && report.gap_bits.back() > report.asymptotic_bits + 1e-8)
        report.pass = false;
    return report;
}

} // namespace miso
