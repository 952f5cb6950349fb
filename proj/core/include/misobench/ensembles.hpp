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

#include "misobench/core_model.hpp"
#include "misobench/rng.hpp"

namespace miso {

/// M x N complex matrix with orthonormal columns b_1 .. b_N (N <= M).
class OrthonormalFrame {
public:
    /// Validates orthonormality to `tol` per Gram entry; throws DomainError.
    explicit OrthonormalFrame(CMatrix columns, double tol = 1e-10);

    const CMatrix &columns() const noexcept { return cols_; }
    int m() const noexcept { return static_cast<int>(cols_.rows()); }
    int n() const noexcept { return static_cast<int>(cols_.cols()); }
    auto column(int i) const { return cols_.col(i); }

    /// max_ij |b_i^H b_j - delta_ij|
    double orthonormality_error() const;

    /// First n columns of the M x M identity.
    static OrthonormalFrame canonical(int m, int n);

private:
    CMatrix cols_;
};

double orthonormality_error(const CMatrix &columns);

/// First `n` columns of a Haar-distributed m x m unitary: QR of an m x n
/// i.i.d. complex Gaussian matrix with the phases of diag(R) folded into Q.
/// Throws FrameTooLarge for n > m.
OrthonormalFrame sample_haar_frame(int m, int n, const RngStream &stream);

/// Same draw using an engine the caller already owns.
OrthonormalFrame sample_haar_frame(int m, int n, Xoshiro256 &engine);

/// Density of the length u of the projection of a uniformly distributed unit
/// vector in C^m onto a fixed n-dimensional complex subspace:
///   2 Gamma(m) / (Gamma(n) Gamma(m-n)) u^(2n-1) (1-u^2)^(m-n-1).
/// Requires 1 <= n < m (n == m is a point mass: DegenerateProjection) and
/// 0 <= u <= 1 (DomainError).
double projection_radius_pdf(double u, int m_complex, int n_complex);

/// Density of v = u^2, i.e. Beta(n, m - n).
double projection_radius_sq_pdf(double v, int m_complex, int n_complex);

/// log of Gamma(m) / (Gamma(n) Gamma(m-n)), the Beta(n, m-n) normalizer.
double projection_radius_sq_log_norm(int m_complex, int n_complex);

/// P(r^2 <= v) for integer Beta(n, m - n), as a binomial tail sum.
double projection_radius_sq_cdf(double v, int m_complex, int n_complex);

/// Draws r^2 ~ Beta(n, m - n) as G_n / (G_n + G_{m-n}) with Gamma variates;
/// returns exactly 1 when n == m.
double sample_projection_radius_sq(int m_complex, int n_complex, const RngStream &stream);

namespace detail {
/// Projection length density in real dimensions (M_real, N_real).
double real_projection_pdf(double u, int m_real, int n_real);
} // namespace detail

} // namespace miso
