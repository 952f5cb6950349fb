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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "misobench/analysis.hpp"
#include "misobench/ensembles.hpp"
#include "misobench/error.hpp"
#include "misobench/montecarlo.hpp"
#include "misobench/quadrature.hpp"
#include "misobench/rng.hpp"
#include "misobench/schemes.hpp"
#include "misobench_cli/commands.hpp"

namespace miso::cli {

namespace {

std::string fmt(double x)
{
    return format_double(x);
}

Eigen::Vector4cd random_gains(Xoshiro256 &engine)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Vector4cd g;
    for (int i = 0; i < 4; ++i) {
        const double re = normal(engine);
        const double im = normal(engine);
        g(i) = cdouble(re, im);
    }
    return g;
}

SelftestResult check_orthonormality(std::uint64_t seed)
{
    double worst = 0.0;
    std::uint64_t index = 0;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n)
            for (int rep = 0; rep < 40; ++rep)
                worst = std::max(worst, sample_haar_frame(m, n, RngStream{seed, index++}).orthonormality_error());
    return {"haar frame orthonormality", worst <= 1e-10, "max |B^H B - I| = " + fmt(worst)};
}

SelftestResult check_pdf_normalization(bool corrupt)
{
    const double scale = corrupt ? 0.5 : 1.0;
    double worst = 0.0;
    for (int m = 3; m <= 16; ++m) {
        const auto r = integrate_finite([&](double u) { return scale * ir_bf_a_radius_pdf(u, m); }, 0.0, 1.0, 1e-12);
        worst = std::max(worst, std::abs(r.value - 1.0));
        for (int n : {1, 2, 4}) {
            if (n >= m)
                continue;
            const auto p = integrate_finite([&](double u) { return projection_radius_pdf(u, m, n); }, 0.0, 1.0, 1e-12);
            worst = std::max(worst, std::abs(p.value - 1.0));
        }
    }
    return {"projection pdf normalization", worst <= 1e-10, "max |integral - 1| = " + fmt(worst)};
}

SelftestResult check_second_moment()
{
    double worst = 0.0;
    for (int m = 3; m <= 16; ++m)
        for (int n : {1, 2, 4}) {
            if (n >= m)
                continue;
            const auto r = integrate_finite([&](double u) { return u * u * projection_radius_pdf(u, m, n); }, 0.0,
                                            1.0, 1e-12);
            worst = std::max(worst, std::abs(r.value - static_cast<double>(n) / m));
        }
    return {"E[r^2] = n/M", worst <= 1e-10, "max deviation = " + fmt(worst)};
}

SelftestResult check_structure(std::uint64_t seed)
{
    Xoshiro256 engine(RngStream{seed, 0x5354ULL});
    double alamouti = 0.0, abba = 0.0;
    for (int t = 0; t < 2000; ++t) {
        const Eigen::Vector4cd g = random_gains(engine);
        const Eigen::Vector2cd g2 = g.head<2>();
        const CMatrix ga = alamouti_evcm(g2).gram();
        alamouti = std::max(alamouti,
                            (ga - CMatrix::Identity(2, 2) * (g2.squaredNorm() / 2.0)).cwiseAbs().maxCoeff());
        const Eigen::VectorXd d = abba_evcm(g).gram().diagonal().real();
        abba = std::max(abba, (d.maxCoeff() - d.minCoeff()) / g.squaredNorm());
    }
    const bool pass = alamouti <= 1e-12 && abba <= 1e-12;
    return {"EVCM Gram structure", pass, "alamouti " + fmt(alamouti) + ", abba diag spread " + fmt(abba)};
}

SelftestResult check_mmse_uniformity(std::uint64_t seed)
{
    Xoshiro256 engine(RngStream{seed, 0x4d4dULL});
    int evaluated = 0;
    try {
        for (int t = 0; t < 2000; ++t) {
            const Evcm evcm = abba_evcm(random_gains(engine));
            for (double s : {0.1, 1.0, 10.0, 100.0}) {
                mmse_unbiased_snr(evcm, SnrPoint(s));
                ++evaluated;
            }
        }
    } catch (const Error &e) {
        return {"MMSE SNR index independence", false, e.what()};
    }
    return {"MMSE SNR index independence", true, std::to_string(evaluated) + " EVCMs within 1e-10 relative"};
}

SelftestResult check_trombi_folding(std::uint64_t seed)
{
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 2000; ++t) {
        Xoshiro256 engine(RngStream{seed ^ 0x7452ULL, t});
        const int m = 4 + static_cast<int>(t % 5);
        const ChannelVector h = sample_normalized_channel(m, {seed ^ 0x6368ULL, t});
        SchemeDraw four;
        four.frame = sample_haar_frame(m, 4, engine);
        four.phases = {2.0 * std::numbers::pi * engine.uniform(), 2.0 * std::numbers::pi * engine.uniform()};
        SchemeDraw two;
        two.frame = trombi_folded_frame(*four.frame, four.phases->first, four.phases->second);
        const SnrPoint snr(std::pow(10.0, static_cast<double>(t % 7) - 2.0));
        worst = std::max(worst, std::abs(ir_instant_mi(SchemeId::ir_trombi(), h, snr, four) -
                                         ir_instant_mi(SchemeId::ir_bf_a(), h, snr, two)));
    }
    return {"IR-TROMBI equals IR-BF-A per draw", worst <= 1e-12, "max difference = " + fmt(worst) + " bits"};
}

SelftestResult check_gap_monotonicity()
{
    std::vector<double> grid;
    for (int db = -20; db <= 40; ++db)
        grid.push_back(db);
    bool pass = true;
    std::ostringstream detail;
    for (int m : {3, 4, 8, 16}) {
        const auto report = verify_monotonicity(m, grid);
        pass = pass && report.pass;
        detail << "M=" << m << " max drop " << fmt(report.max_drop) << "; ";
    }
    return {"gap nondecreasing in SNR", pass, detail.str()};
}

SelftestResult check_mc_vs_quadrature(std::uint64_t seed, int workers)
{
    // 4 sigma keeps the verdict stable under seed changes across nine checks.
    constexpr double kSigmas = 4.0;
    double worst_z = 0.0;
    std::uint64_t salt = 0;
    for (int m : {3, 4, 8})
        for (double s : {1.0, 10.0, 100.0}) {
            McConfig cfg;
            cfg.trials = 100000;
            cfg.seed = derive_seed(seed, ++salt);
            cfg.workers = workers;
            const SnrPoint snr(s);
            const auto est = ergodic_mi(SchemeId::ir_bf_a(), ChannelVector(CVector::Ones(m)), snr, cfg);
            const double mc_gap = opt_mi(snr) - est.mean_bits;
            const double quad = gap_closed_form(snr, m).gap_bits;
            worst_z = std::max(worst_z, std::abs(mc_gap - quad) / est.stderr_bits);
        }
    return {"Monte-Carlo gap matches quadrature", worst_z <= kSigmas,
            "max |MC - quadrature| = " + fmt(worst_z) + " stderr (limit 4)"};
}

} // namespace

std::vector<SelftestResult> run_selftest(const SelftestOptions &opt)
{
    std::vector<SelftestResult> results;
    auto guarded = [&](const char *name, auto &&check) {
        try {
            results.push_back(check());
        } catch (const std::exception &e) {
            results.push_back({name, false, e.what()});
        }
    };
    guarded("haar frame orthonormality", [&] { return check_orthonormality(opt.seed); });
    guarded("projection pdf normalization", [&] { return check_pdf_normalization(opt.corrupt_prefactor); });
    guarded("E[r^2] = n/M", [&] { return check_second_moment(); });
    guarded("EVCM Gram structure", [&] { return check_structure(opt.seed); });
    guarded("MMSE SNR index independence", [&] { return check_mmse_uniformity(opt.seed); });
    guarded("IR-TROMBI equals IR-BF-A per draw", [&] { return check_trombi_folding(opt.seed); });
    guarded("gap nondecreasing in SNR", [&] { return check_gap_monotonicity(); });
    guarded("Monte-Carlo gap matches quadrature", [&] { return check_mc_vs_quadrature(opt.seed, opt.workers); });
    return results;
}

} // namespace miso::cli
