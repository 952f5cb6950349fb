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

// Acceptance suite: one PASS/FAIL line per criterion. The first argument is
// the path of the misobench executable (used by the determinism check).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "misobench/analysis.hpp"
#include "misobench/ensembles.hpp"
#include "misobench/error.hpp"
#include "misobench/montecarlo.hpp"
#include "misobench/schemes.hpp"
#include "misobench/stats.hpp"
#include "misobench_cli/commands.hpp"
#include "oracles.hpp"

using namespace miso;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Suite {
  public:
    void run(const std::string &id, const std::string &title, double time_limit_s,
             const std::function<Outcome()> &body)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (time_limit_s > 0.0 && elapsed > time_limit_s) {
            o.pass = false;
            o.detail += "; runtime limit " + fmt(time_limit_s) + " s exceeded";
        }
        failures_ += o.pass ? 0 : 1;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << " (" << fmt(elapsed) << " s): "
                  << o.detail << std::endl;
    }

    int failures() const { return failures_; }

    static std::string fmt(double x)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", x);
        return buf;
    }

  private:
    int failures_ = 0;
};

std::string fmt(double x) { return Suite::fmt(x); }

McConfig mc(std::int64_t trials, std::uint64_t seed)
{
    McConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

Eigen::VectorXcd gaussian_vector(int m, Xoshiro256 &engine)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::VectorXcd g(m);
    for (int i = 0; i < m; ++i) {
        const double re = normal(engine);
        const double im = normal(engine);
        g[i] = cdouble(re, im);
    }
    return g;
}

Outcome ac1()
{
    const auto g = gap_limit_virtual(2);
    const bool pass = std::abs(g.gap_bits - 0.3901) <= 1e-3 && std::abs(g.gap_db - 1.174) <= 5e-3;
    return {pass, "gap = " + fmt(g.gap_bits) + " bits = " + fmt(g.gap_db) + " dB (want 0.3901 +- 0.001, 1.174 +- 0.005)"};
}

Outcome ac2()
{
    const auto g = gap_limit_virtual(1);
    const bool pass = std::abs(g.gap_bits - 0.8327) <= 1e-3 && std::abs(g.gap_db - 2.508) <= 5e-3;
    return {pass, "gap = " + fmt(g.gap_bits) + " bits = " + fmt(g.gap_db) + " dB (want 0.8327 +- 0.001, 2.508 +- 0.005)"};
}

Outcome ac3()
{
    bool nondecreasing = true;
    double previous = -1.0;
    for (int m = 2; m <= 64; ++m) {
        const double g = gap_asymptotic(m).gap_bits;
        nondecreasing = nondecreasing && g >= previous;
        previous = g;
    }
    const double at2 = gap_asymptotic(2).gap_bits;
    const double at3 = gap_asymptotic(3).gap_bits;
    // E[-ln r^2] = 1/2 under the M = 3 density 2v.
    const double oracle3 = std::log2(2.0 / 3.0) + 0.5 / std::numbers::ln2;
    const double at1000 = gap_asymptotic(1000).gap_bits;
    const bool pass = nondecreasing && at2 == 0.0 && std::abs(at3 - oracle3) <= 1e-5 && at1000 >= 0.38;
    return {pass, std::string(nondecreasing ? "nondecreasing" : "NOT nondecreasing") + " on 2..64; M=2 " +
                      fmt(at2) + "; M=3 " + fmt(at3) + " vs analytic " + fmt(oracle3) + " (tol 1e-5); M=1000 " +
                      fmt(at1000) + " (want >= 0.38)"};
}

Outcome ac4()
{
    double worst_z = 0.0;
    bool pass = true;
    std::uint64_t seed = 400;
    for (int m : {3, 4, 8}) {
        for (double s : {1.0, 10.0, 100.0}) {
            const auto est =
                ergodic_mi(SchemeId::ir_bf_a(), ChannelVector(CVector::Ones(m)), SnrPoint(s), mc(1000000, ++seed));
            const double mc_gap = opt_mi(SnrPoint(s)) - est.mean_bits;
            const double quad = gap_closed_form(SnrPoint(s), m).gap_bits;
            const double z = std::abs(mc_gap - quad) / est.stderr_bits;
            worst_z = std::max(worst_z, z);
            pass = pass && z <= 3.0;
        }
    }
    return {pass, "9 (snr, M) pairs at 1e6 trials, worst |MC - quadrature| = " + fmt(worst_z) + " stderr (want <= 3)"};
}

Outcome ac5()
{
    std::vector<double> grid;
    for (int db = -20; db <= 40; ++db)
        grid.push_back(db);
    bool pass = true;
    std::string detail;
    for (int m : {3, 4, 8, 16}) {
        const auto r = verify_monotonicity(m, grid);
        pass = pass && r.pass;
        detail += "M=" + std::to_string(m) + " max drop " + fmt(r.max_drop) + "; ";
    }
    return {pass, detail + "slack 1e-9"};
}

Outcome ac6()
{
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        Xoshiro256 engine(RngStream{606, t});
        const ChannelVector h = sample_normalized_channel(4, {607, t});
        SchemeDraw four;
        four.frame = sample_haar_frame(4, 4, engine);
        four.phases = {2.0 * std::numbers::pi * engine.uniform(), 2.0 * std::numbers::pi * engine.uniform()};
        SchemeDraw two;
        two.frame = trombi_folded_frame(*four.frame, four.phases->first, four.phases->second);
        const SnrPoint snr = SnrPoint::from_db(static_cast<double>(t % 5) * 10.0 - 10.0);
        worst = std::max(worst, std::abs(ir_instant_mi(SchemeId::ir_trombi(), h, snr, four) -
                                         ir_instant_mi(SchemeId::ir_bf_a(), h, snr, two)));
    }
    bool pass = worst <= 1e-12;
    double worst_z = 0.0;
    const ChannelVector h(CVector::Ones(4));
    std::uint64_t seed = 600;
    for (double db : {0.0, 10.0, 20.0}) {
        const auto a = ergodic_mi(SchemeId::ir_trombi(), h, SnrPoint::from_db(db), mc(100000, ++seed));
        const auto b = ergodic_mi(SchemeId::ir_bf_a(), h, SnrPoint::from_db(db), mc(100000, ++seed));
        const double z = std::abs(a.mean_bits - b.mean_bits) / std::hypot(a.stderr_bits, b.stderr_bits);
        worst_z = std::max(worst_z, z);
        pass = pass && z <= 3.0;
    }
    return {pass, "per-draw max difference " + fmt(worst) + " bits over 1e4 draws (tol 1e-12); ergodic worst " +
                      fmt(worst_z) + " combined stderr at 1e5 trials (want <= 3)"};
}

Outcome ac7()
{
    cli::Figure2Options opt;
    opt.snr_db = {0.0, 5.0, 10.0, 15.0, 20.0};
    opt.mc.trials = 100000;
    opt.mc.seed = 7;
    opt.random_directions = 0;
    std::ostringstream out, log;
    cli::write_figure2(out, log, opt);
    // snr -> scheme -> (mean, stderr)
    std::map<double, std::map<std::string, std::pair<double, double>>> table;
    const auto rows = parse_csv(out.str());
    for (std::size_t i = 1; i < rows.size(); ++i)
        table[std::stod(rows[i][0])][rows[i][1]] = {std::stod(rows[i][2]), std::stod(rows[i][3])};

    const std::vector<std::string> order{"OPT", "IR_BF_A", "IR_ABBA", "IR_BF"};
    bool pass = table.size() == opt.snr_db.size();
    double min_margin = 1e300;
    for (const auto &[db, row] : table) {
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            const auto hi = row.at(order[k]);
            const auto lo = row.at(order[k + 1]);
            const double diff = hi.first - lo.first;
            pass = pass && diff >= 0.0;
            if (db >= 10.0) {
                const double margin = diff / std::hypot(hi.second, lo.second);
                min_margin = std::min(min_margin, margin);
                pass = pass && margin > 3.0;
            }
        }
    }
    return {pass, "OPT >= IR_BF_A >= IR_ABBA >= IR_BF at 0..20 dB; smallest margin at >= 10 dB = " +
                      fmt(min_margin) + " stderr (want > 3)"};
}

Outcome ac8()
{
    cli::Figure5Options opt;
    opt.snr_db = {0.0, 5.0, 10.0, 20.0, 30.0};
    opt.mc.trials = 100000;
    opt.mc.seed = 5;
    std::ostringstream out, log;
    cli::write_figure5(out, log, opt);
    std::map<double, std::map<int, double>> gaps;
    const auto rows = parse_csv(out.str());
    for (std::size_t i = 1; i < rows.size(); ++i)
        gaps[std::stod(rows[i][0])][std::stoi(rows[i][1])] = std::stod(rows[i][2]);

    bool pass = gaps.size() == opt.snr_db.size();
    std::string detail = "n=2 smallest at";
    for (const auto &[db, row] : gaps) {
        const auto best = std::min_element(row.begin(), row.end(),
                                           [](const auto &a, const auto &b) { return a.second < b.second; });
        const bool ok = best->first == 2;
        pass = pass && ok;
        detail += " " + fmt(db) + (ok ? "" : "(no)");
    }
    const double g20 = gaps[20.0][8];
    const double g30 = gaps[30.0][8];
    pass = pass && g30 > g20;
    return {pass, detail + " dB; n=8 gap " + fmt(g20) + " -> " + fmt(g30) + " bits from 20 to 30 dB"};
}

Outcome ac9()
{
    double worst = 0.0;
    Xoshiro256 engine(RngStream{909, 0});
    for (int t = 0; t < 1000; ++t) {
        const Eigen::Vector2cd g = normalize_channel(ChannelVector(gaussian_vector(2, engine))).coefficients();
        const SnrPoint snr = SnrPoint::from_db(-10.0 + 50.0 * engine.uniform());
        worst = std::max(worst, std::abs(alamouti_mi(snr, g) - opt_mi(snr)));
    }
    return {worst <= 1e-12, "max |I_Alamouti - I_OPT| = " + fmt(worst) + " bits over 1e3 channels (tol 1e-12)"};
}

Outcome ac10()
{
    Xoshiro256 engine(RngStream{1010, 0});
    double gram_err = 0.0, diag_err = 0.0, mmse_err = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Eigen::Vector2cd g2 = gaussian_vector(2, engine);
        const Eigen::Matrix2cd target = Eigen::Matrix2cd::Identity() * (g2.squaredNorm() / 2.0);
        gram_err = std::max(gram_err, (alamouti_evcm(g2).gram() - target).cwiseAbs().maxCoeff());

        const Eigen::Vector4cd g4 = gaussian_vector(4, engine);
        const Evcm abba = abba_evcm(g4);
        const Eigen::VectorXd d = abba.gram().diagonal().real();
        diag_err = std::max(diag_err, (d.array() - d[0]).abs().maxCoeff());

        const double snr = std::pow(10.0, -1.0 + 4.0 * engine.uniform());
        const double reference = mmse_unbiased_snr(abba, SnrPoint(snr));
        testing::DenseC h(4, std::vector<cdouble>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                h[i][j] = abba.matrix()(i, j);
        for (std::size_t i = 0; i < 4; ++i)
            mmse_err = std::max(mmse_err,
                                std::abs(testing::brute_force_mmse_snr(h, snr, i) - reference) / reference);
    }

    double norm_err = 0.0, moment_err = 0.0;
    for (int m : {3, 4, 6, 8, 16, 32}) {
        const double mass = integrate_finite([=](double u) { return ir_bf_a_radius_pdf(u, m); }, 0.0, 1.0, 1e-12).value;
        const double second =
            integrate_finite([=](double u) { return u * u * ir_bf_a_radius_pdf(u, m); }, 0.0, 1.0, 1e-12).value;
        norm_err = std::max(norm_err, std::abs(mass - 1.0));
        moment_err = std::max(moment_err, std::abs(second - 2.0 / m));
    }

    // r^2 = squared length of the first row of a Haar 4 x 2 frame ~ Beta(2, 2).
    constexpr int kSamples = 100000;
    std::vector<double> r2(kSamples);
    for (int t = 0; t < kSamples; ++t)
        r2[t] = sample_haar_frame(4, 2, RngStream{1011, static_cast<std::uint64_t>(t)}).columns().row(0).squaredNorm();
    const double ks = ks_statistic(r2, [](double v) { return projection_radius_sq_cdf(v, 4, 2); });
    const double crit = ks_critical_value(0.01, kSamples);

    const bool pass = gram_err <= 1e-12 && diag_err <= 1e-12 && mmse_err <= 1e-10 && norm_err <= 1e-10 &&
                      moment_err <= 1e-10 && ks <= crit;
    return {pass, "Alamouti Gram " + fmt(gram_err) + ", ABBA diagonal " + fmt(diag_err) + ", MMSE index spread " +
                      fmt(mmse_err) + " rel, pdf mass " + fmt(norm_err) + ", E[r^2] " + fmt(moment_err) +
                      ", KS " + fmt(ks) + " vs " + fmt(crit) + " at 1%"};
}

std::string read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome ac11(const std::string &exe, const std::string &extra_args)
{
    const auto dir = std::filesystem::temp_directory_path() / ("misobench_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::string> outputs;
    bool ran = true;
    for (int threads : {1, 2, 8}) {
        const auto path = dir / ("figure2_t" + std::to_string(threads) + ".csv");
        const std::string cmd = "MISOBENCH_THREADS=" + std::to_string(threads) + " \"" + exe +
                                "\" figure2 --seed 7" + extra_args + " --out \"" + path.string() + "\" 2>/dev/null";
        ran = ran && std::system(cmd.c_str()) == 0;
        outputs.push_back(read_file(path));
    }
    std::filesystem::remove_all(dir);
    const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
    const bool pass = ran && same && !outputs[0].empty();
    return {pass, std::string(ran ? "" : "a run failed; ") + "CSV of " + std::to_string(outputs[0].size()) +
                      " bytes " + (same ? "byte-identical" : "DIFFERS") + " under 1, 2 and 8 threads"};
}

} // namespace

int main(int argc, char **argv)
{
    if (argc < 2) {
        std::cerr << "usage: misobench_acceptance <path-to-misobench> [extra figure2 args]\n";
        return 2;
    }
    const std::string exe = argv[1];
    std::string extra;
    for (int i = 2; i < argc; ++i)
        extra += std::string(" ") + argv[i];

    Suite suite;
    suite.run("AC1", "limit gap, two virtual antennas", 1.0, ac1);
    suite.run("AC2", "limit gap, one virtual antenna", 1.0, ac2);
    suite.run("AC3", "high-SNR gap versus M", 10.0, ac3);
    suite.run("AC4", "Monte-Carlo versus quadrature", 120.0, ac4);
    suite.run("AC5", "gap nondecreasing in SNR", 0.0, ac5);
    suite.run("AC6", "IR-TROMBI equals IR-BF-A", 0.0, ac6);
    suite.run("AC7", "four-antenna scheme ordering", 0.0, ac7);
    suite.run("AC8", "virtual antenna count at M = 8", 0.0, ac8);
    suite.run("AC9", "Alamouti achieves I_OPT", 0.0, ac9);
    suite.run("AC10", "structural invariants", 0.0, ac10);
    suite.run("AC11", "figure2 determinism across threads", 0.0, [&] { return ac11(exe, extra); });
    std::cout << (suite.failures() == 0 ? "acceptance: all criteria passed"
                                        : "acceptance: " + std::to_string(suite.failures()) + " criteria failed")
              << std::endl;
    return suite.failures() == 0 ? 0 : 1;
}
