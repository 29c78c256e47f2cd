// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_EXPERIMENTS_HPP
#define COOPNET_EXPERIMENTS_HPP

#include "coopnet/fit.hpp"
#include "coopnet/io.hpp"
#include "coopnet/protocol.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coopnet
{

enum class Preset
{
    None,
    Theorem1,
    Theorem2,
    Theorem3
};

std::string to_string(Preset p);
Preset parse_preset(const std::string &s);

// Flat key = value configuration. Keys are listed in the README.
struct RunConfig
{
    std::string experiment = "verify";
    Preset preset = Preset::None;
    std::vector<std::int64_t> N = {729};
    std::string topology = "regular_center";
    double alpha = 4.0;
    double L = 1.0;
    int C = 1;
    double Q = 2.0;
    double P = 1.0;
    double N0 = 1e-4;
    double A = 0.0;       // 0 selects max(2/delta^2, 1/f(delta)) + 1
    double lambda = 0.0;  // 0 selects ln N
    double delta = 0.5;
    int trials = 200;
    int K = 0;            // 0 selects the optimum
    int k_cap = 7;
    int seeds = 1;
    RateSource mode = RateSource::Bound;
    Duplex duplex = Duplex::Full;
    bool bound_interference = false;
    std::uint64_t seed = 1;
    std::string out = "out";

    SchemeConfig scheme() const;
    // Sorted key=value lines; the config hash is taken over this text.
    std::string canonical() const;
    std::string hash() const;
    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Applies `key = value` lines from `path` on top of `base`. '#' starts a comment.
RunConfig load_config(const std::string &path, RunConfig base = {});
void apply_setting(RunConfig &cfg, const std::string &key, const std::string &value);

struct VerifyCheck
{
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double reference = 0.0;
    std::string detail;
};

struct VerifyReport
{
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

VerifyReport run_verify(const RunConfig &cfg);

// Sum_d phi(g, d) = g and phi >= 0 for g = 9^k, k = 1..k_max.
bool phi_conservation_holds(const std::function<std::int64_t(std::int64_t, std::int64_t)> &phi, int k_max);

// logdet(I + P2/(N0 + I_inter) H H*) / g(k) for two level-k clusters two widths apart.
double lemma4_ratio(int k, const ChannelParams &params, std::uint64_t seed);
void write_verify_json(std::ostream &os, const VerifyReport &r, const std::string &config_hash, std::uint64_t seed);

struct SweepRow
{
    double N = 0.0;
    double lambda = 1.0;
    int K = 0;
    bool optimal = false;
    ThroughputReport report;
};

struct Verdict
{
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    double r_squared = 1.0;
    double min_r_squared = 0.0;
    bool pass = false;
};

struct PresetResult
{
    Preset preset = Preset::None;
    std::vector<SweepRow> rows;
    std::vector<ScalingFit> fits;
    std::optional<PlaneFit> plane;
    std::vector<Verdict> verdicts;
    bool all_pass() const;
};

Verdict slope_verdict(const std::string &name, double measured, double target, double tolerance, double r2,
                      double min_r2 = 0.98);

// `on_row` sees every row as soon as it is computed, in deterministic order.
PresetResult run_preset(Preset preset, const RunConfig &cfg,
                        const std::function<void(const SweepRow &)> &on_row = {});

// Sweep CSV: N, lambda, K, alpha, mode, T1, T2, T3, throughput, P2, optimal.
class SweepCsv
{
public:
    SweepCsv(std::ostream &os, const RunConfig &cfg);
    void row(const SweepRow &r);

private:
    CsvWriter csv_;
    double alpha_;
    std::string mode_;
};

void write_sweep_summary(std::ostream &os, const PresetResult &r, const RunConfig &cfg);

} // namespace coopnet

#endif
