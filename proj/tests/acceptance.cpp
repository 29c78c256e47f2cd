// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------
//
// Acceptance gate: one PASS/FAIL line per criterion. Each criterion also has to finish
// inside its wall-clock budget. Exit status is the number of failures.

#include "coopnet/experiments.hpp"
#include "coopnet/randomnet.hpp"
#include "coopnet/rates.hpp"
#include "coopnet/rng.hpp"
#include "coopnet/scheduling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

using namespace coopnet;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char *name, double budget_s, const std::function<Outcome()> &body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
        o = body();
    }
    catch (const std::exception &e)
    {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt <= budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s %2d %-28s %s [%.2fs / %.0fs%s]\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), dt, budget_s,
                in_time ? "" : ", over budget");
    std::fflush(stdout);
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0, double d = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

Outcome preset_outcome(Preset p)
{
    RunConfig cfg;
    cfg.preset = p;
    const auto res = run_preset(p, cfg);
    std::string detail;
    for (const auto &v : res.verdicts)
        detail += v.name + "=" + fmt("%.4f (target %.4f +/- %.2f, R2 %.4f) ", v.measured, v.target, v.tolerance,
                                     v.r_squared);
    return {res.all_pass(), detail};
}

} // namespace

int main()
{
    const RunConfig defaults;
    const ChannelParams params = defaults.scheme().params;

    criterion(1, "phi_oracle_equivalence", 1.0, [] {
        std::int64_t mismatches = 0;
        bool conserved = true;
        for (int k = 1; k <= 6; ++k)
        {
            const auto g = cluster_area(k);
            const auto brute = phi_bruteforce_table(g);
            std::int64_t sum = 0;
            for (std::int64_t d = 0; d <= pow3(k); ++d)
            {
                mismatches += phi_d(g, d) != brute[static_cast<std::size_t>(d)];
                sum += phi_d(g, d);
            }
            conserved &= sum == g;
        }
        return Outcome{mismatches == 0 && conserved,
                       "mismatches=" + std::to_string(mismatches) + " conserved=" + (conserved ? "yes" : "no")};
    });

    criterion(2, "trace_below_logdet", 60.0, [&] {
        // Cast iteration k moves data between level-(k-1) clusters.
        int violations = 0, cases = 0;
        double tightest = std::numeric_limits<double>::infinity();
        for (double alpha : {2.5, 3.0, 4.0, 6.0})
            for (int k = 1; k <= 4; ++k)
            {
                const auto net = place_worst_case_pair(k - 1);
                const auto tx = pair_tx_ids(net), rx = pair_rx_ids(net);
                for (std::uint64_t s = 0; s < 100; ++s)
                {
                    const auto H = build_channel_matrix(net, tx, rx, alpha, derive_seed(defaults.seed, s));
                    const auto r = mimo_rate(H.entries, params.base_power, params.noise_power, 0.0);
                    violations += r.trace_bound > r.exact_logdet * (1.0 + 1e-9);
                    tightest = std::min(tightest, r.exact_logdet - r.trace_bound);
                    ++cases;
                }
            }
        return Outcome{violations == 0, "violations=" + std::to_string(violations) + "/" + std::to_string(cases) +
                                            fmt(" min(logdet - trace bound)=%.3g", tightest)};
    });

    criterion(3, "trace_growth", 60.0, [&] {
        std::vector<std::pair<double, double>> pts;
        double first = 0.0, lowest = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 5; ++k)
        {
            const double root = static_cast<double>(pow3(k));
            const double tr = trace_from_counts(cluster_area(k), params.alpha);
            pts.emplace_back(root, tr);
            if (k == 1)
                first = tr / root;
            lowest = std::min(lowest, tr / root);
        }
        const auto f = fit_loglog(pts);
        // Bounded below: the ratio never drops under half its k = 1 value.
        const bool ok = f.slope >= 0.9 && lowest > 0.0 && lowest >= 0.5 * first;
        return Outcome{ok, fmt("slope=%.4f R2=%.4f min Tr/sqrt(g)=%.4g (k=1: %.4g)", f.slope, f.r_squared, lowest,
                               first)};
    });

    criterion(4, "interference_bound", 120.0, [&] {
        double worst_ratio = 0.0;
        int cases = 0;
        for (std::int64_t N : {729, 6561})
            for (auto mode : {RegularMode::Center, RegularMode::Uniform})
            {
                const auto net = place_regular(N, mode, defaults.seed);
                const int K = std::min(3, CellModel::regular(static_cast<double>(N)).max_level());
                const auto grid = build_cluster_grid(net, K);
                for (int k = 1; k <= K; ++k)
                {
                    const auto s = make_schedule(grid, k, Reuse::Nine);
                    const ClusterCoord probe{0, 0};
                    const double bound =
                        exact_interference(net, grid, s, s.slot_of(probe), probe, params.base_power, params.alpha)
                            .bound;
                    const double exact = max_exact_interference(net, grid, s, params.base_power, params.alpha);
                    worst_ratio = std::max(worst_ratio, exact / bound);
                    ++cases;
                }
            }
        bool decreasing = true;
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 10; ++k)
        {
            const double b = intra_interference_bound(k, 1e24, params).limit;
            decreasing &= b < prev;
            prev = b;
        }
        return Outcome{worst_ratio <= 1.0 && decreasing,
                       fmt("max exact/bound=%.4g over %.0f cases, bound at g=9^10: %.3g", worst_ratio, cases, prev) +
                           (decreasing ? " (monotone)" : " (not monotone)")};
    });

    criterion(5, "inter_cluster_linearity", 300.0, [&] {
        std::string detail;
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int k = 1; k <= 4; ++k)
        {
            double mean = 0.0;
            for (std::uint64_t s = 0; s < 20; ++s)
                mean += lemma4_ratio(k - 1, params, derive_seed(defaults.seed, s)) / 20.0;
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
            detail += fmt("g=%.0f:%.5f ", static_cast<double>(cluster_area(k - 1)), mean);
        }
        return Outcome{lo > 0.0 && lo >= 0.5 * hi, detail + fmt("min/max=%.3f", lo / hi)};
    });

    criterion(6, "miso_constant", 10.0, [&] {
        const double closed = miso_constant(4.0);
        const double series = miso_series(4.0, 1000000);
        const auto net = place_worst_case_corner(4);
        const auto grid = build_cluster_grid(net, 4);
        const double gain = miso_gain(net, grid, 4, 0, 4.0);
        const bool ok = std::abs(series - closed) < 1e-6 && gain > closed;
        return Outcome{ok, fmt("c6=%.9f series=%.9f |diff|=%.2g corner gain g=3^8: %.6f", closed, series,
                               std::abs(series - closed), gain)};
    });

    criterion(7, "theorem1_sweep", 120.0, [] { return preset_outcome(Preset::Theorem1); });
    criterion(8, "theorem2_sweep", 300.0, [] { return preset_outcome(Preset::Theorem2); });
    criterion(9, "theorem3_sweep", 300.0, [] { return preset_outcome(Preset::Theorem3); });

    criterion(10, "bin_concentration", 120.0, [&] {
        const double A = default_bin_factor(0.5);
        const auto r = concentration_check(10000, Variant::UnitDensityLogBins, A, 0.5, 200, defaults.seed);
        const bool ok = r.empirical_prob >= r.union_floor && r.empirical_prob >= 0.95;
        return Outcome{ok, fmt("A=%.3g clean=%.3f union floor=%.4f bins=%.0f", A, r.empirical_prob, r.union_floor,
                               static_cast<double>(r.bins))};
    });

    criterion(11, "determinism", 600.0, [] {
        auto csv = [](Preset p, RateSource mode) {
            RunConfig cfg;
            cfg.preset = p;
            cfg.mode = mode;
            std::ostringstream os;
            SweepCsv out(os, cfg);
            run_preset(p, cfg, [&](const SweepRow &r) { out.row(r); });
            return os.str();
        };
        bool same = true;
        std::size_t bytes = 0;
        for (auto p : {Preset::Theorem1, Preset::Theorem2, Preset::Theorem3})
        {
            const auto a = csv(p, RateSource::Bound);
            same &= a == csv(p, RateSource::Bound);
            bytes += a.size();
        }
        const auto s = csv(Preset::Theorem1, RateSource::Simulated);
        same &= s == csv(Preset::Theorem1, RateSource::Simulated);
        bytes += s.size();
        return Outcome{same, std::string(same ? "identical" : "differ") + " across reruns, " + std::to_string(bytes) +
                                 " bytes over 4 sweeps"};
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
