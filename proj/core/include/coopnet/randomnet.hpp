// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_RANDOMNET_HPP
#define COOPNET_RANDOMNET_HPP

#include "coopnet/fit.hpp"
#include "coopnet/protocol.hpp"

#include <cstdint>
#include <vector>

namespace coopnet
{

enum class Variant
{
    UnitDensityLogBins, // unit density, bins of area A ln N
    Density             // density lambda, unit bins
};

// (1 + delta) ln(1 + delta)
double chernoff_f(double delta);

// max(2/delta^2, 1/f(delta)) + 1
double default_bin_factor(double delta);

// 1 - 2 bins N^(-A min(delta^2/2, f(delta))), clamped to [0, 1].
double union_bound_floor(double N, double A, double delta, std::size_t bins);

struct ConcentrationReport
{
    double N = 0.0;
    double A_or_lambda = 0.0;
    double delta = 0.0;
    std::size_t bins = 0;
    double mean = 0.0;               // expected nodes per bin
    std::int64_t trials = 0;
    std::int64_t violations = 0;     // bins outside [(1-delta) mean, (1+delta) mean], all trials
    std::int64_t clean_trials = 0;   // trials with no violating bin
    double empirical_prob = 0.0;     // clean_trials / trials
    double union_floor = 0.0;
};

// Monte Carlo over `trials` placements with seeds derived from `seed`.
ConcentrationReport concentration_check(std::int64_t N, Variant variant, double A_or_lambda, double delta, int trials,
                                        std::uint64_t seed);

CellModel cell_model(Variant variant, double N, double A_or_lambda);

// Largest distance between two points of one bin.
double max_bin_distance(Variant variant, double N, double A_or_lambda);

// Per-iteration in-bin dissemination time 9 (m - 1) L / r, r the worst in-bin pairwise rate.
double intra_square_time(Variant variant, double N, const SchemeConfig &cfg, double A_or_lambda);

// Level-k cast rate of the variant's timing stack (bits per use).
double random_intra_rate(Variant variant, int k, double N, const SchemeConfig &cfg, double A_or_lambda);

// Unit density: log2(1 + g' (A ln N)^(1 - alpha/2)) and the regime split g' = (ln N)^(alpha/2 - 1).
double unit_density_rate_shape(double g_prime, double N, double A, double alpha);
double unit_density_regime_split(double N, double alpha);

// Density lambda: interference bound 8 P c2 lambda / g^(alpha/2 - 1) and the g where it meets N0.
double density_interference_bound(int k, double lambda, const ChannelParams &params);
double density_regime_split(double lambda, const ChannelParams &params);
// Cast rate with the interference bound included.
double density_cast_rate(int k, double lambda, const ChannelParams &params);

// Exponent of N in the hop power at the optimal cluster size: alpha/6 - 1/3.
double hop_power_exponent(double alpha);

struct RandomSweepRow
{
    double N = 0.0;
    double A_or_lambda = 0.0;
    LevelSearch search;
    double cluster_size = 0.0; // nodes per cluster at the balance point
};

struct RandomSweep
{
    std::vector<RandomSweepRow> rows;
    ScalingFit throughput; // unit: T / (ln N)^((2-alpha)/6) vs N; density: T vs lambda N
    ScalingFit cluster;    // unit: size / (ln N)^((2-alpha)/3) vs N; density: area vs N
    ScalingFit power;      // P2 at K* vs N
};

// `A_or_lambda[i]` applies to N_grid[i]. K searched over 1..min(k_cap, max level).
RandomSweep random_throughput_sweep(Variant variant, const std::vector<double> &N_grid,
                                    const std::vector<double> &A_or_lambda, const SchemeConfig &cfg, int k_cap);

} // namespace coopnet

#endif
