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

#include "misobench_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "misobench/analysis.hpp"
#include "misobench/error.hpp"
#include "misobench/montecarlo.hpp"
#include "misobench/rng.hpp"

namespace miso::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

McConfig to_config(const McOptions &mc, std::uint64_t seed)
{
    McConfig cfg;
    cfg.trials = mc.trials;
    cfg.max_trials = std::max<std::int64_t>(cfg.max_trials, mc.trials);
    cfg.seed = seed;
    cfg.workers = mc.workers;
    return cfg;
}

// Seed of grid point k; point 0 keeps the base seed.
std::uint64_t point_seed(std::uint64_t seed, std::size_t k)
{
    return k == 0 ? seed : derive_seed(seed, k);
}

ChannelVector equal_gain_channel(int m)
{
    return ChannelVector(CVector::Ones(m));
}

void require(bool condition, const std::string &message)
{
    if (!condition)
        throw Error(ErrorKind::DomainError, message);
}

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

double parse_number(std::string_view text)
{
    const std::string s = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::DomainError, "not a number: '" + s + "'");
    return value;
}

} // namespace

std::string format_double(double value)
{
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return buffer;
}

std::vector<double> parse_snr_range(std::string_view text)
{
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(parse_number(text.substr(start, colon - start)));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    require(parts.size() == 3, "SNR range must look like A:B:STEP");
    const double a = parts[0], b = parts[1], step = parts[2];
    require(step > 0.0 && b >= a, "SNR range needs STEP > 0 and A <= B");
    std::vector<double> grid;
    const auto count = static_cast<long>(std::floor((b - a) / step + 0.5 + 1e-9));
    for (long i = 0; i <= count; ++i) {
        const double x = a + static_cast<double>(i) * step;
        if (x > b + 0.5 * step)
            break;
        grid.push_back(x);
    }
    return grid;
}

double parse_snr_db(std::string_view text)
{
    const std::string s = trim(text);
    if (s == "inf" || s == "+inf")
        return kInf;
    return parse_number(s);
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = trim(text.substr(start, comma - start));
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw Error(ErrorKind::DomainError, "not an integer: '" + item + "'");
        values.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return values;
}

std::vector<double> default_snr_grid_db()
{
    return parse_snr_range("-10:40:2");
}

std::vector<ChannelVector> trombi_adversarial_channels()
{
    const double r2 = std::sqrt(2.0);
    return {
        ChannelVector({0.0, 0.0, r2, r2}),
        ChannelVector({r2, r2, 0.0, 0.0}),
        ChannelVector({1.0, 1.0, 1.0, 1.0}),
        ChannelVector({2.0, 0.0, 0.0, 0.0}),
    };
}

void write_figure2(std::ostream &out, std::ostream &log, const Figure2Options &opt)
{
    require(opt.m >= 4, "figure2 needs M >= 4 (IR_ABBA and IR_TROMBI use four beams)");
    require(opt.random_directions >= 0, "random direction count must be nonnegative");
    const bool with_trombi_wc = opt.m == 4;
    if (!with_trombi_wc)
        log << "warning: figure2 is defined for M = 4; TROMBI_WC needs four antennas and is omitted\n";

    std::vector<ChannelVector> wc_grid;
    if (with_trombi_wc) {
        wc_grid = trombi_adversarial_channels();
        const std::uint64_t grid_seed = derive_seed(opt.mc.seed, 0x57434752ULL);
        for (int k = 0; k < opt.random_directions; ++k)
            wc_grid.push_back(sample_normalized_channel(4, {grid_seed, static_cast<std::uint64_t>(k)}));
        log << "# TROMBI_WC grid: " << wc_grid.size() << " directions (4 adversarial + " << opt.random_directions
            << " random, seed " << opt.mc.seed << ")\n";
        for (std::size_t k = 0; k < wc_grid.size(); ++k) {
            log << "#   h" << k << " =";
            for (int i = 0; i < 4; ++i)
                log << ' ' << format_double(wc_grid[k][i].real()) << (wc_grid[k][i].imag() < 0 ? "" : "+")
                    << format_double(wc_grid[k][i].imag()) << 'j';
            log << '\n';
        }
    }

    const ChannelVector h = equal_gain_channel(opt.m);
    const SchemeId mc_schemes[] = {SchemeId::ir_bf(), SchemeId::ir_abba(), SchemeId::ir_trombi(),
                                   SchemeId::ir_bf_a()};

    out << kFigure2Header << '\n';
    for (std::size_t k = 0; k < opt.snr_db.size(); ++k) {
        const double db = opt.snr_db[k];
        const SnrPoint snr = SnrPoint::from_db(db);
        const std::uint64_t seed = point_seed(opt.mc.seed, k);
        auto row = [&](std::string_view name, const MiEstimate &e) {
            out << format_double(db) << ',' << name << ',' << format_double(e.mean_bits) << ','
                << format_double(e.stderr_bits) << ',' << e.trials << '\n';
        };

        row("OPT", {opt_mi(snr), 0.0, 1});
        for (std::size_t s = 0; s < std::size(mc_schemes); ++s) {
            const auto est = ergodic_mi(mc_schemes[s], h, snr, to_config(opt.mc, derive_seed(seed, s + 1)));
            row(to_string(mc_schemes[s]), est);
        }
        if (with_trombi_wc) {
            MiEstimate worst{kInf, 0.0, 0};
            for (std::size_t d = 0; d < wc_grid.size(); ++d) {
                const auto est = ergodic_mi(SchemeId::trombi(), wc_grid[d], snr,
                                            to_config(opt.mc, derive_seed(seed, 100 + d)));
                if (est.mean_bits < worst.mean_bits)
                    worst = est;
            }
            row("TROMBI_WC", worst);
        }
    }
}

std::vector<int> default_figure4_m_list()
{
    std::vector<int> ms;
    for (int m = 2; m <= 64; ++m)
        ms.push_back(m);
    for (int m : {128, 256, 512, 1024, 4096, 16384})
        ms.push_back(m);
    return ms;
}

void write_figure4(std::ostream &out, const Figure4Options &opt)
{
    for (int m : opt.m_list)
        require(m >= 2, "figure4 needs every M >= 2");
    out << kFigure4Header << '\n';
    for (int m : opt.m_list) {
        const GapValue g = gap_asymptotic(m);
        out << m << ',' << format_double(g.gap_bits) << ',' << format_double(g.gap_db) << '\n';
    }
    const GapValue limit = gap_limit_virtual(2);
    out << "inf," << format_double(limit.gap_bits) << ',' << format_double(limit.gap_db) << '\n';
}

void write_figure5(std::ostream &out, std::ostream &log, const Figure5Options &opt)
{
    for (int n : opt.n_list)
        require(n >= 1 && n <= opt.m && (n == 1 || n == 2 || n == 4 || n == 8),
                "figure5 needs n_virtual in {1,2,4,8} and n <= M");
    const ChannelVector h = equal_gain_channel(opt.m);

    double worst_z = 0.0;
    out << kFigure5Header << '\n';
    for (std::size_t k = 0; k < opt.snr_db.size(); ++k) {
        const double db = opt.snr_db[k];
        const SnrPoint snr = SnrPoint::from_db(db);
        const std::uint64_t seed = point_seed(opt.mc.seed, k);
        for (int n : opt.n_list) {
            const auto est = ergodic_mi(SchemeId::ir_ostbc(n), h, snr,
                                        to_config(opt.mc, derive_seed(seed, static_cast<std::uint64_t>(n))));
            const double gap = opt_mi(snr) - est.mean_bits;
            out << format_double(db) << ',' << n << ',' << format_double(gap) << ',' << format_double(est.stderr_bits)
                << '\n';
            const double quad = gap_general(snr, opt.m, n).gap_bits;
            if (est.stderr_bits > 0.0)
                worst_z = std::max(worst_z, std::abs(gap - quad) / est.stderr_bits);
        }
    }
    log << "# figure5 quadrature cross-check: max |MC - quadrature| / stderr = " << format_double(worst_z) << '\n';
}

void write_gap(std::ostream &out, const GapOptions &opt)
{
    require(opt.m >= 2, "gap needs M >= 2");
    require(opt.n_virtual >= 1 && opt.n_virtual <= opt.m, "gap needs 1 <= n_virtual <= M");
    require(!opt.snr_db.empty(), "gap needs --snr-db or --snr-db-range");
    out << kGapHeader << '\n';
    for (double db : opt.snr_db) {
        const SnrPoint snr = SnrPoint::from_db(db);
        const GapValue g = opt.n_virtual == 2 ? gap_closed_form(snr, opt.m) : gap_general(snr, opt.m, opt.n_virtual);
        out << format_double(db) << ',' << opt.m << ',' << opt.n_virtual << ',' << format_double(g.gap_bits) << ','
            << format_double(g.gap_db) << ',' << format_double(g.abs_error_bound) << ',' << to_string(g.method)
            << '\n';
    }
}

void write_mi(std::ostream &out, const MiOptions &opt)
{
    require(!opt.snr_db.empty(), "mi needs --snr-db or --snr-db-range");
    ChannelVector h = equal_gain_channel(opt.m);
    if (!opt.channel.empty()) {
        require(static_cast<int>(opt.channel.size()) == opt.m, "--channel needs exactly M gains");
        CVector c(opt.m);
        for (int i = 0; i < opt.m; ++i)
            c(i) = opt.channel[static_cast<std::size_t>(i)];
        h = normalize_channel(ChannelVector(std::move(c)));
    }
    std::vector<SnrPoint> grid;
    for (double db : opt.snr_db) {
        require(std::isfinite(db), "mi needs finite SNR values");
        grid.push_back(SnrPoint::from_db(db));
    }
    const auto estimates = sweep_ergodic_mi(opt.scheme, h, grid, to_config(opt.mc, opt.mc.seed));
    out << kMiHeader << '\n';
    for (std::size_t k = 0; k < grid.size(); ++k) {
        out << format_double(opt.snr_db[k]) << ',' << to_string(opt.scheme) << ',' << opt.m << ','
            << format_double(estimates[k].mean_bits) << ',' << format_double(estimates[k].stderr_bits) << ','
            << estimates[k].trials << '\n';
    }
}

bool write_ndo(std::ostream &out, const NdoOptions &opt)
{
    require(std::isfinite(opt.snr_db), "ndo needs a finite SNR");
    const NdoReport report =
        ndo_check(opt.scheme, opt.m, SnrPoint::from_db(opt.snr_db), opt.directions, to_config(opt.mc, opt.mc.seed));
    out << kNdoHeader << '\n';
    out << to_string(opt.scheme) << ',' << opt.m << ',' << format_double(opt.snr_db) << ',' << opt.directions << ','
        << format_double(report.max_pairwise_gap_bits) << ',' << format_double(report.stderr_bits) << ','
        << (report.pass ? "pass" : "fail") << '\n';
    return report.pass;
}

bool write_selftest(std::ostream &out, const SelftestOptions &opt)
{
    const auto results = run_selftest(opt);
    bool all = true;
    std::size_t width = 0;
    for (const auto &r : results)
        width = std::max(width, r.name.size());
    for (const auto &r : results) {
        all = all && r.pass;
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail
            << '\n';
    }
    out << (all ? "selftest: all checks passed" : "selftest: FAILED") << '\n';
    return all;
}

namespace {

int workers_from_env()
{
    const char *value = std::getenv("MISOBENCH_THREADS");
    if (value == nullptr || *value == '\0')
        return 0;
    int workers = 0;
    const std::string_view text(value);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), workers);
    if (ec != std::errc() || ptr != text.data() + text.size() || workers < 0)
        throw Error(ErrorKind::DomainError, "MISOBENCH_THREADS must be a nonnegative integer");
    return workers;
}

struct Flags {
    int m = 0;
    int n_virtual = 2;
    std::string snr_db;
    std::string snr_db_range;
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    int directions = 8;
    std::string out_path;
    std::string scheme = "IR_BF_A";
    std::string m_list;
    std::string n_list;
    std::string channel;
    bool corrupt_prefactor = false;
};

std::vector<double> snr_axis(const Flags &f, const std::vector<double> &fallback)
{
    if (!f.snr_db.empty() && !f.snr_db_range.empty())
        throw Error(ErrorKind::DomainError, "use either --snr-db or --snr-db-range");
    if (!f.snr_db.empty())
        return {parse_snr_db(f.snr_db)};
    if (!f.snr_db_range.empty())
        return parse_snr_range(f.snr_db_range);
    return fallback;
}

std::vector<double> finite_axis(const Flags &f, const std::vector<double> &fallback)
{
    auto axis = snr_axis(f, fallback);
    for (double db : axis)
        require(std::isfinite(db), "this command needs finite SNR values");
    return axis;
}

SchemeId scheme_from(const std::string &name)
{
    const auto id = parse_scheme(name);
    if (!id)
        throw Error(ErrorKind::DomainError, "unknown scheme '" + name + "'");
    return *id;
}

} // namespace

int run(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"misobench: scalar coding limits for open-loop MISO channels"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", f.out_path, "Output path (stdout if omitted)");
    };
    auto add_mc = [&](CLI::App *sub) {
        sub->add_option("--trials", f.trials, "Monte-Carlo trials per estimate")->check(CLI::PositiveNumber);
        sub->add_option("--seed", f.seed, "Base RNG seed");
    };
    auto add_snr = [&](CLI::App *sub) {
        sub->add_option("--snr-db", f.snr_db, "Single SNR in dB (or 'inf' where allowed)");
        sub->add_option("--snr-db-range", f.snr_db_range, "SNR grid A:B:STEP in dB");
    };

    auto *fig2 = app.add_subcommand("figure2", "Ergodic MI of the four-antenna schemes versus SNR");
    fig2->add_option("--m", f.m, "Transmit antennas (default 4)");
    add_snr(fig2);
    add_mc(fig2);
    fig2->add_option("--directions", f.directions, "Random directions in the TROMBI worst-case grid (default 64)");
    add_common(fig2);

    auto *fig4 = app.add_subcommand("figure4", "Asymptotic IR-BF-A gap versus M");
    fig4->add_option("--m-list", f.m_list, "Comma-separated antenna counts");
    add_common(fig4);

    auto *fig5 = app.add_subcommand("figure5", "Gap versus SNR for several virtual antenna counts");
    fig5->add_option("--m", f.m, "Transmit antennas (default 8)");
    fig5->add_option("--n-list", f.n_list, "Comma-separated virtual antenna counts (default 1,2,4,8)");
    add_snr(fig5);
    add_mc(fig5);
    add_common(fig5);

    auto *gap = app.add_subcommand("gap", "Quadrature gap to the white-input mutual information");
    gap->add_option("--m", f.m, "Transmit antennas")->required();
    gap->add_option("--n-virtual", f.n_virtual, "Virtual antennas (default 2)");
    add_snr(gap);
    add_common(gap);

    auto *mi = app.add_subcommand("mi", "Ergodic mutual information of one scheme");
    mi->add_option("--scheme", f.scheme, "OPT, IR_BF, ALAMOUTI, ABBA, IR_ABBA, TROMBI, IR_TROMBI, IR_BF_A, IR_OSTBC{1,2,4,8}");
    mi->add_option("--m", f.m, "Transmit antennas")->required();
    mi->add_option("--channel", f.channel, "Comma-separated real gains (default: equal gains)");
    add_snr(mi);
    add_mc(mi);
    add_common(mi);

    auto *ndo = app.add_subcommand("ndo", "Check that a scheme depends on the channel only through its norm");
    ndo->add_option("--scheme", f.scheme, "Randomized scheme (default IR_BF_A)");
    ndo->add_option("--m", f.m, "Transmit antennas")->required();
    ndo->add_option("--snr-db", f.snr_db, "SNR in dB")->required();
    ndo->add_option("--directions", f.directions, "Random channel directions (default 8)");
    add_mc(ndo);
    add_common(ndo);

    auto *selftest = app.add_subcommand("selftest", "Run the invariant suite");
    selftest->add_option("--seed", f.seed, "Base RNG seed");
    selftest->add_flag("--debug-corrupt-prefactor", f.corrupt_prefactor)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        const int workers = workers_from_env();
        const McOptions mc{f.trials, f.seed, workers};
        std::ostringstream buffer;
        int code = kExitOk;

        if (fig2->parsed()) {
            Figure2Options o;
            o.m = f.m == 0 ? 4 : f.m;
            o.snr_db = finite_axis(f, default_snr_grid_db());
            o.mc = mc;
            if (fig2->count("--directions") > 0)
                o.random_directions = f.directions;
            write_figure2(buffer, err, o);
        } else if (fig4->parsed()) {
            Figure4Options o;
            o.m_list = f.m_list.empty() ? default_figure4_m_list() : parse_int_list(f.m_list);
            write_figure4(buffer, o);
        } else if (fig5->parsed()) {
            Figure5Options o;
            o.m = f.m == 0 ? 8 : f.m;
            if (!f.n_list.empty())
                o.n_list = parse_int_list(f.n_list);
            o.snr_db = finite_axis(f, default_snr_grid_db());
            o.mc = mc;
            write_figure5(buffer, err, o);
        } else if (gap->parsed()) {
            GapOptions o;
            o.m = f.m;
            o.n_virtual = f.n_virtual;
            o.snr_db = snr_axis(f, {});
            write_gap(buffer, o);
        } else if (mi->parsed()) {
            MiOptions o;
            o.scheme = scheme_from(f.scheme);
            o.m = f.m;
            o.snr_db = finite_axis(f, {});
            o.mc = mc;
            if (!f.channel.empty()) {
                std::string_view rest = f.channel;
                while (true) {
                    const auto comma = rest.find(',');
                    o.channel.push_back(parse_snr_db(rest.substr(0, comma)));
                    if (comma == std::string_view::npos)
                        break;
                    rest.remove_prefix(comma + 1);
                }
            }
            write_mi(buffer, o);
        } else if (ndo->parsed()) {
            NdoOptions o;
            o.scheme = scheme_from(f.scheme);
            o.m = f.m;
            o.snr_db = parse_snr_db(f.snr_db);
            o.directions = f.directions;
            o.mc = mc;
            if (!write_ndo(buffer, o))
                code = kExitNumerical;
        } else if (selftest->parsed()) {
            SelftestOptions o;
            o.seed = f.seed;
            o.workers = workers;
            o.corrupt_prefactor = f.corrupt_prefactor;
            if (!write_selftest(buffer, o))
                code = kExitNumerical;
        }

        if (f.out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(f.out_path, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot open '" << f.out_path << "' for writing\n";
                return kExitValidation;
            }
            file << buffer.str();
            if (!file.flush()) {
                err << "error: failed writing '" << f.out_path << "'\n";
                return kExitValidation;
            }
        }
        return code;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return is_numerical(e.kind()) ? kExitNumerical : kExitValidation;
    }
}

} // namespace miso::cli
