// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------
//
// coopnet <place|rate|phases|sweep|randomnet|verify> [--config f] [--seed s] [--out dir]
//         [--mode bound|simulated] [--preset theorem1|theorem2|theorem3] [--skip-verify]

#include "coopnet/experiments.hpp"
#include "coopnet/io.hpp"
#include "coopnet/randomnet.hpp"
#include "coopnet/rates.hpp"
#include "coopnet/rng.hpp"
#include "coopnet/scheduling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <cstdint>
#include <sstream>

namespace fs = std::filesystem;
using namespace coopnet;

namespace
{

std::ofstream open_out(const RunConfig &cfg, const std::string &name)
{
    const fs::path p = fs::path(cfg.out) / name;
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot write " + p.string());
    std::printf("wrote %s\n", p.string().c_str());
    return os;
}

NetworkInstance make_network(const RunConfig &cfg)
{
    const std::int64_t N = cfg.N.front();
    if (cfg.topology == "regular_center")
        return place_regular(N, RegularMode::Center, cfg.seed);
    if (cfg.topology == "regular_uniform")
        return place_regular(N, RegularMode::Uniform, cfg.seed);
    if (cfg.topology == "worst_case_pair")
        return place_worst_case_pair(std::max(1, cfg.K));
    if (cfg.topology == "worst_case_corner")
        return place_worst_case_corner(std::max(1, cfg.K));
    return place_random(N, cfg.lambda != 0.0 ? cfg.lambda : 1.0, cfg.seed);
}

int cmd_place(const RunConfig &cfg)
{
    const auto net = make_network(cfg);
    const std::string h = cfg.hash();
    {
        auto os = open_out(cfg, "network.csv");
        write_network_csv(os, net, h);
    }
    {
        auto os = open_out(cfg, "network.json");
        write_network_sidecar(os, net, cfg.K, h);
    }
    const bool gridded = net.topology != Topology::WorstCasePair;
    if (gridded && cfg.K >= 1)
    {
        const auto grid = build_cluster_grid(net, cfg.K);
        auto os = open_out(cfg, "schedule.csv");
        for (int k = 1; k <= cfg.K; ++k)
        {
            const auto s = make_schedule(grid, k, Reuse::Nine);
            if (k == 1)
                write_schedule_csv(os, s, h, cfg.seed);
            else
            {
                std::ostringstream tmp;
                write_schedule_csv(tmp, s, h, cfg.seed);
                const auto text = tmp.str();
                os << text.substr(text.find('\n') + 1);
            }
        }
    }
    std::printf("%zu nodes, side %g, topology %s\n", net.size(), net.side_length, to_string(net.topology).c_str());
    return 0;
}

int cmd_rate(const RunConfig &cfg)
{
    const int k_max = cfg.K >= 1 ? cfg.K : 3;
    const std::string h = cfg.hash();
    {
        auto os = open_out(cfg, "rates.csv");
        CsvWriter csv(os, {"k", "alpha", "channel_seed", "exact", "bound", "trace"}, h, cfg.seed);
        for (int k = 1; k <= k_max; ++k)
        {
            const auto net = place_worst_case_pair(k);
            for (int t = 0; t < cfg.seeds; ++t)
            {
                const std::uint64_t s = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
                const auto H = build_channel_matrix(net, pair_tx_ids(net), pair_rx_ids(net), cfg.alpha, s);
                const auto r = mimo_rate(H.entries, cfg.P, cfg.N0, 0.0);
                csv.row({std::to_string(k), format_double(cfg.alpha), std::to_string(s), format_double(r.exact_logdet),
                         format_double(r.trace_bound), format_double(channel_power(H.entries))});
                std::printf("k=%d seed=%llu exact=%.6g bound=%.6g\n", k, static_cast<unsigned long long>(s),
                            r.exact_logdet, r.trace_bound);
            }
        }
    }
    const std::int64_t N = cfg.N.front();
    const auto net = place_regular(N, RegularMode::Center, cfg.seed);
    const int level = std::max(1, std::min(k_max, CellModel::regular(static_cast<double>(N)).max_level()));
    const auto grid = build_cluster_grid(net, level);
    const auto sched = make_schedule(grid, 1, Reuse::Nine);
    const int mid = grid.per_side(1) / 2;
    const ClusterCoord rx{mid, mid};
    auto rep = exact_interference(net, grid, sched, sched.slot_of(rx), rx, cfg.P, cfg.alpha);
    auto os = open_out(cfg, "interference.json");
    write_interference_json(os, rep, h, cfg.seed);
    return 0;
}

int cmd_phases(const RunConfig &cfg)
{
    const std::int64_t N = cfg.N.front();
    const auto sc = cfg.scheme();
    const auto cm = CellModel::regular(static_cast<double>(N));
    ThroughputReport rep;
    int K = cfg.K;
    if (K == 0)
        K = optimize_cluster_level(cm, sc, std::max(1, cm.max_level() - 1)).K_star;
    if (cfg.mode == RateSource::Bound)
        rep = evaluate_bound(cm, K, sc);
    else
    {
        const auto mode = cfg.topology == "regular_uniform" ? RegularMode::Uniform : RegularMode::Center;
        rep = end_to_end_run(place_regular(N, mode, cfg.seed), sc, K, cfg.seed);
    }
    auto os = open_out(cfg, "report.json");
    write_report_json(os, rep, cfg.hash(), cfg.seed);
    std::printf("N=%g K=%d T1=%.6g T2=%.6g T3=%.6g throughput=%.6g\n", rep.N, rep.K, rep.T1, rep.T2, rep.T3,
                rep.throughput);
    return 0;
}

int cmd_verify(const RunConfig &cfg, bool quiet = false)
{
    const auto rep = run_verify(cfg);
    if (!quiet)
    {
        auto os = open_out(cfg, "verify.json");
        write_verify_json(os, rep, cfg.hash(), cfg.seed);
    }
    for (const auto &c : rep.checks)
        std::printf("%-4s %-36s measured=%.6g reference=%.6g %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(), c.measured,
                    c.reference, c.detail.c_str());
    std::printf("%zu checks, %s\n", rep.checks.size(), rep.all_pass() ? "all passed" : "FAILURES");
    return rep.all_pass() ? 0 : 1;
}

int cmd_sweep(const RunConfig &cfg, bool skip_verify)
{
    if (cfg.preset == Preset::None)
        throw std::invalid_argument("config field 'preset': sweep needs --preset");
    if (!skip_verify && cmd_verify(cfg, true) != 0)
    {
        std::fprintf(stderr, "verify failed; refusing to sweep (use --skip-verify to override)\n");
        return 2;
    }
    auto csv_os = open_out(cfg, "sweep.csv");
    SweepCsv csv(csv_os, cfg);
    const auto res = run_preset(cfg.preset, cfg, [&](const SweepRow &r) { csv.row(r); });
    auto js = open_out(cfg, "summary.json");
    write_sweep_summary(js, res, cfg);
    for (const auto &v : res.verdicts)
        std::printf("%-4s %-30s measured=%.4f target=%.4f +/- %.3f R2=%.4f\n", v.pass ? "ok" : "FAIL", v.name.c_str(),
                    v.measured, v.target, v.tolerance, v.r_squared);
    return 0;
}

int cmd_randomnet(const RunConfig &cfg)
{
    const std::int64_t N = cfg.N.front();
    const bool unit = cfg.lambda == 0.0;
    const double param = unit ? (cfg.A != 0.0 ? cfg.A : default_bin_factor(cfg.delta > 0.0 ? cfg.delta : 0.5))
                              : cfg.lambda;
    const auto rep = concentration_check(N, unit ? Variant::UnitDensityLogBins : Variant::Density, param, cfg.delta,
                                         cfg.trials, cfg.seed);
    const auto h = cfg.hash();
    {
        auto os = open_out(cfg, "concentration.csv");
        CsvWriter csv(os,
                      {"N", "variant", "A_or_lambda", "delta", "bins", "mean", "trials", "violations", "clean_trials",
                       "empirical_prob", "union_floor"},
                      h, cfg.seed);
        csv.row({std::to_string(N), unit ? "unit" : "density", format_double(param), format_double(cfg.delta),
                 std::to_string(rep.bins), format_double(rep.mean), std::to_string(rep.trials),
                 std::to_string(rep.violations), std::to_string(rep.clean_trials), format_double(rep.empirical_prob),
                 format_double(rep.union_floor)});
    }
    std::printf("bins=%zu mean=%.4g clean=%lld/%lld floor=%.6f\n", rep.bins, rep.mean,
                static_cast<long long>(rep.clean_trials), static_cast<long long>(rep.trials), rep.union_floor);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"coopnet: cooperative hierarchical relaying simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out, mode, preset;
    std::uint64_t seed = 0;
    bool skip_verify = false;
    app.add_option("--config", config_path, "flat key = value configuration file")->check(CLI::ExistingFile);
    auto *seed_opt = app.add_option("--seed", seed, "master seed");
    app.add_option("--out", out, "output directory");
    app.add_option("--mode", mode, "timing mode")->check(CLI::IsMember({"bound", "simulated"}));
    app.add_option("--preset", preset, "sweep preset")->check(CLI::IsMember({"theorem1", "theorem2", "theorem3"}));
    app.add_flag("--skip-verify", skip_verify, "sweep even if verify fails");

    for (const char *name : {"place", "rate", "phases", "sweep", "randomnet", "verify"})
        app.add_subcommand(name);

    CLI11_PARSE(app, argc, argv);

    try
    {
        RunConfig cfg;
        if (!config_path.empty())
            cfg = load_config(config_path, cfg);
        const std::string cmd = app.get_subcommands().front()->get_name();
        cfg.experiment = cmd;
        if (*seed_opt)
            cfg.seed = seed;
        if (!out.empty())
            cfg.out = out;
        if (!mode.empty())
            apply_setting(cfg, "mode", mode);
        if (!preset.empty())
            cfg.preset = parse_preset(preset);
        cfg.validate();
        fs::create_directories(cfg.out);

        if (cmd == "place")
            return cmd_place(cfg);
        if (cmd == "rate")
            return cmd_rate(cfg);
        if (cmd == "phases")
            return cmd_phases(cfg);
        if (cmd == "sweep")
            return cmd_sweep(cfg, skip_verify);
        if (cmd == "randomnet")
            return cmd_randomnet(cfg);
        return cmd_verify(cfg);
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
