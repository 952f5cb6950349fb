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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace miso {

/// One-pass mean / variance accumulator (Welford), mergeable with Chan's
/// pairwise update. Merging the same partials in the same order is
/// bit-reproducible.
class RunningStats {
public:
    void push(double x) noexcept;
    void merge(const RunningStats &other) noexcept;

    std::int64_t count() const noexcept { return count_; }
    double mean() const noexcept { return mean_; }
    /// Unbiased sample variance; 0 for fewer than two samples.
    double variance() const noexcept;
    /// sample_std / sqrt(count)
    double standard_error() const noexcept;

private:
    std::int64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// sup_x |F_n(x) - cdf(x)|. `samples` is sorted in place.
double ks_statistic(std::vector<double> &samples, const std::function<double(double)> &cdf);

/// Two-sample sup |F_a - F_b|. Both inputs are sorted in place.
double ks_statistic_two_sample(std::vector<double> &a, std::vector<double> &b);

/// Large-sample critical value c(alpha) * sqrt((n + m) / (n m)) with
/// c(alpha) = sqrt(-ln(alpha / 2) / 2). Pass m = 0 for the one-sample test.
double ks_critical_value(double alpha, std::int64_t n, std::int64_t m = 0);

} // namespace miso
