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

#include "misobench/stats.hpp"

#include <algorithm>
#include <cmath>

namespace miso {

void RunningStats::push(double x) noexcept
{
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats &other) noexcept
{
    if (other.count_ == 0)
        return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const double n_a = static_cast<double>(count_);
    const double n_b = static_cast<double>(other.count_);
    const double total = n_a + n_b;
    const double delta = other.mean_ - mean_;
    mean_ += delta * (n_b / total);
    m2_ += other.m2_ + delta * delta * (n_a * n_b / total);
    count_ += other.count_;
}

double RunningStats::variance() const noexcept
{
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
}

double RunningStats::standard_error() const noexcept
{
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
}

double ks_statistic(std::vector<double> &samples, const std::function<double(double)> &cdf)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double above = (static_cast<double>(i) + 1.0) / n - f;
        const double below = f - static_cast<double>(i) / n;
        worst = std::max({worst, above, below});
    }
    return worst;
}

double ks_statistic_two_sample(std::vector<double> &a, std::vector<double> &b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double worst = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return worst;
}

double ks_critical_value(double alpha, std::int64_t n, std::int64_t m)
{
    const double c = std::sqrt(-0.5 * std::log(0.5 * alpha));
    const double dn = static_cast<double>(n);
    if (m <= 0)
        return c / std::sqrt(dn);
    const double dm = static_cast<double>(m);
    return c * std::sqrt((dn + dm) / (dn * dm));
}

} // namespace miso
