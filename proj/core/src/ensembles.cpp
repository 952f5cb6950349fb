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

#include "misobench/ensembles.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "misobench/error.hpp"
#include "misobench/special.hpp"

namespace miso {

namespace {

void check_dims(int m, int n)
{
    if (m < 1 || n < 1) {
        std::ostringstream os;
        os << "dimensions must be positive (m=" << m << ", n=" << n << ")";
        throw Error(ErrorKind::DomainError, os.str());
    }
}

} // namespace

double orthonormality_error(const CMatrix &columns)
{
    const CMatrix gram = columns.adjoint() * columns;
    return (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

OrthonormalFrame::OrthonormalFrame(CMatrix columns, double tol) : cols_(std::move(columns))
{
    if (cols_.cols() < 1 || cols_.cols() > cols_.rows())
        throw Error(ErrorKind::DomainError, "frame needs 1 <= n <= m columns");
    if (miso::orthonormality_error(cols_) > tol)
        throw Error(ErrorKind::DomainError, "frame columns are not orthonormal");
}

double OrthonormalFrame::orthonormality_error() const
{
    return miso::orthonormality_error(cols_);
}

OrthonormalFrame OrthonormalFrame::canonical(int m, int n)
{
    check_dims(m, n);
    if (n > m)
        throw Error(ErrorKind::FrameTooLarge, "frame size exceeds ambient dimension");
    return OrthonormalFrame(CMatrix::Identity(m, n));
}

OrthonormalFrame sample_haar_frame(int m, int n, Xoshiro256 &engine)
{
    check_dims(m, n);
    if (n > m) {
        std::ostringstream os;
        os << "cannot draw " << n << " orthonormal columns in C^" << m;
        throw Error(ErrorKind::FrameTooLarge, os.str());
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix gaussian(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            const double re = normal(engine);
            const double im = normal(engine);
            gaussian(i, j) = cdouble(re, im);
        }

    Eigen::HouseholderQR<CMatrix> qr(gaussian);
    CMatrix q = qr.householderQ() * CMatrix::Identity(m, n);
    const auto &packed = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const cdouble r = packed(j, j);
        const double mag = std::abs(r);
        if (mag > 0.0)
            q.col(j) *= r / mag;
    }
    return OrthonormalFrame(std::move(q));
}

OrthonormalFrame sample_haar_frame(int m, int n, const RngStream &stream)
{
    Xoshiro256 engine(stream);
    return sample_haar_frame(m, n, engine);
}

namespace detail {

double real_projection_pdf(double u, int m_real, int n_real)
{
    if (!(u >= 0.0 && u <= 1.0))
        throw Error(ErrorKind::DomainError, "projection length must lie in [0, 1]");
    if (n_real < 1 || m_real <= n_real)
        throw Error(ErrorKind::DomainError, "real projection needs 1 <= N < M");
    const double half_m = 0.5 * m_real;
    const double half_n = 0.5 * n_real;
    const double log_norm = std::log(2.0) + special::log_gamma(half_m) - special::log_gamma(half_n) -
                            special::log_gamma(half_m - half_n);
    const int u_power = n_real - 1;
    const double tail_power = 0.5 * (m_real - n_real - 2);

    if (u == 0.0)
        return u_power == 0 ? std::exp(log_norm) : 0.0;
    double log_value = log_norm + u_power * std::log(u);
    if (tail_power != 0.0) {
        if (u == 1.0)
            return tail_power > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        log_value += tail_power * std::log1p(-u * u);
    }
    return std::exp(log_value);
}

} // namespace detail

double projection_radius_pdf(double u, int m_complex, int n_complex)
{
    check_dims(m_complex, n_complex);
    if (n_complex == m_complex)
        throw Error(ErrorKind::DegenerateProjection, "full-space projection has r = 1 deterministically");
    if (n_complex > m_complex)
        throw Error(ErrorKind::FrameTooLarge, "projection dimension exceeds ambient dimension");
    return detail::real_projection_pdf(u, 2 * m_complex, 2 * n_complex);
}

double projection_radius_sq_log_norm(int m_complex, int n_complex)
{
    return -special::log_beta(n_complex, m_complex - n_complex);
}

double projection_radius_sq_pdf(double v, int m_complex, int n_complex)
{
    check_dims(m_complex, n_complex);
    if (n_complex == m_complex)
        throw Error(ErrorKind::DegenerateProjection, "full-space projection has r = 1 deterministically");
    if (n_complex > m_complex)
        throw Error(ErrorKind::FrameTooLarge, "projection dimension exceeds ambient dimension");
    if (!(v >= 0.0 && v <= 1.0))
        throw Error(ErrorKind::DomainError, "squared projection length must lie in [0, 1]");

    const int a = n_complex - 1;
    const int b = m_complex - n_complex - 1;
    if ((v == 0.0 && a > 0) || (v == 1.0 && b > 0))
        return 0.0;
    double log_value = projection_radius_sq_log_norm(m_complex, n_complex);
    if (a > 0)
        log_value += a * std::log(v);
    if (b > 0)
        log_value += b * std::log1p(-v);
    return std::exp(log_value);
}

double projection_radius_sq_cdf(double v, int m_complex, int n_complex)
{
    check_dims(m_complex, n_complex);
    if (n_complex > m_complex)
        throw Error(ErrorKind::FrameTooLarge, "projection dimension exceeds ambient dimension");
    if (n_complex == m_complex)
        return v >= 1.0 ? 1.0 : 0.0;
    if (v <= 0.0)
        return 0.0;
    if (v >= 1.0)
        return 1.0;
    // I_v(a, b) = sum_{j=a}^{a+b-1} C(a+b-1, j) v^j (1-v)^(a+b-1-j)
    const int total = m_complex - 1;
    const double log_v = std::log(v);
    const double log_w = std::log1p(-v);
    double sum = 0.0;
    for (int j = n_complex; j <= total; ++j) {
        const double log_binom =
            special::log_gamma(total + 1.0) - special::log_gamma(j + 1.0) - special::log_gamma(total - j + 1.0);
        sum += std::exp(log_binom + j * log_v + (total - j) * log_w);
    }
    return std::min(sum, 1.0);
}

double sample_projection_radius_sq(int m_complex, int n_complex, const RngStream &stream)
{
    check_dims(m_complex, n_complex);
    if (n_complex > m_complex)
        throw Error(ErrorKind::FrameTooLarge, "projection dimension exceeds ambient dimension");
    if (n_complex == m_complex)
        return 1.0;
    Xoshiro256 engine(stream);
    std::gamma_distribution<double> inside(static_cast<double>(n_complex), 1.0);
    std::gamma_distribution<double> outside(static_cast<double>(m_complex - n_complex), 1.0);
    const double x = inside(engine);
    const double y = outside(engine);
    return x / (x + y);
}

} // namespace miso
