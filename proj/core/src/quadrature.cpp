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

#include "misobench/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "misobench/error.hpp"

namespace miso {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment &other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)> &f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult Quadrature::integrate(const std::function<double(double)> &f, double a, double b) const
{
    if (!(a <= b))
        throw Error(ErrorKind::DomainError, "integration bounds must satisfy a <= b");
    if (a == b)
        return {};

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    double value = first.value;
    double error = first.error;
    heap.push(first);
    int splits = 0;

    // Below ~50 ulp of the running value the Kronrod/Gauss difference is noise.
    auto budget = [&] { return std::max(abs_tol, 50.0 * std::numeric_limits<double>::epsilon() * std::abs(value)); };
    while (error > budget()) {
        if (splits >= max_subdivisions || !std::isfinite(error)) {
            std::ostringstream os;
            os << "no convergence on [" << a << ", " << b << "] after " << splits
               << " subdivisions (error estimate " << error << ", budget " << abs_tol << ")";
            throw Error(ErrorKind::QuadratureFailure, os.str());
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;

        // Re-sum periodically; the running updates drift by rounding.
        if (splits % 64 == 0) {
            double v = 0.0, e = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                v += copy.top().value;
                e += copy.top().error;
                copy.pop();
            }
            value = v;
            error = e;
        }
    }
    return {value, std::max(error, 0.0), splits};
}

QuadratureResult Quadrature::integrate(const std::function<double(double)> &f,
                                       std::span<const double> breakpoints) const
{
    if (breakpoints.size() < 2)
        return {};
    Quadrature piece = *this;
    piece.abs_tol = abs_tol / static_cast<double>(breakpoints.size() - 1);
    QuadratureResult total;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const QuadratureResult r = piece.integrate(f, breakpoints[i], breakpoints[i + 1]);
        total.value += r.value;
        total.error_bound += r.error_bound;
        total.subdivisions += r.subdivisions;
    }
    return total;
}

QuadratureResult integrate_finite(const std::function<double(double)> &f, double a, double b, double tol)
{
    Quadrature rule;
    rule.abs_tol = tol;
    return rule.integrate(f, a, b);
}

} // namespace miso
