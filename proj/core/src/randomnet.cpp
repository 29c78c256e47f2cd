// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/randomnet.hpp"
#include "coopnet/rates.hpp"
#include "coopnet/rng.hpp"
#include "coopnet/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopnet
{

double chernoff_f(double delta)
{
    return (1.0 + delta) * std::log1p(delta);
}

double default_bin_factor(double delta)
{
    if (!(delta > 0.0))
        throw std::invalid_argument("delta must be > 0");
    return std::max(2.0 / (delta * delta), 1.0 / chernoff_f(delta)) + 1.0;
}

double union_bound_floor(double N, double A, double delta, std::size_t bins)
{
    const double rate = std::min(0.5 * delta * delta, chernoff_f(delta));
    const double fail = 2.0 * static_cast<double>(bins) * std::exp(-A * rate * std::log(N));
    return std::clamp(1.0 - fail, 0.0, 1.0);
}

ConcentrationReport concentration_check(std::int64_t N, Variant variant, double A_or_lambda, double delta, int trials,
                                        std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (!(delta >= 0.0))
        throw std::invalid_argument("delta must be >= 0");
    const double lnN = std::log(static_cast<double>(N));
    const bool unit = variant == Variant::UnitDensityLogBins;
    if (unit && !(A_or_lambda > 1.0))
        throw std::invalid_argument("A must be > 1");
    if (!unit && !(A_or_lambda >= 1.0))
        throw std::invalid_argument("lambda must be >= 1");
    const double lambda = unit ? 1.0 : A_or_lambda;
    const double nominal = unit ? A_or_lambda * lnN : 1.0;

    ConcentrationReport r;
    r.N = static_cast<double>(N);
    r.A_or_lambda = A_or_lambda;
    r.delta = delta;
    r.trials = trials;
    for (int t = 0; t < trials; ++t)
    {
        const auto net = place_random(N, lambda, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const auto bins = bin_nodes(net, nominal);
        r.bins = bins.bins.size();
        r.mean = static_cast<double>(net.size()) * bins.bin_area() / (net.side_length * net.side_length);
        const double lo = (1.0 - delta) * r.mean, hi = (1.0 + delta) * r.mean;
        std::int64_t bad = 0;
        for (const auto &b : bins.bins)
        {
            const auto c = static_cast<double>(b.size());
            bad += (c < lo || c > hi);
        }
        r.violations += bad;
        r.clean_trials += bad == 0;
    }
    r.empirical_prob = static_cast<double>(r.clean_trials) / static_cast<double>(r.trials);
    const double A_eff = unit ? A_or_lambda : A_or_lambda / lnN;
    r.union_floor = delta > 0.0 ? union_bound_floor(r.N, A_eff, delta, r.bins) : 0.0;
    return r;
}

CellModel cell_model(Variant variant, double N, double A_or_lambda)
{
    return variant == Variant::UnitDensityLogBins ? CellModel::unit_density(N, A_or_lambda)
                                                  : CellModel::density(N, A_or_lambda);
}

double max_bin_distance(Variant variant, double N, double A_or_lambda)
{
    return std::sqrt(2.0 * cell_model(variant, N, A_or_lambda).cell_area);
}

double intra_square_time(Variant variant, double N, const SchemeConfig &cfg, double A_or_lambda)
{
    const auto cm = cell_model(variant, N, A_or_lambda);
    const auto &p = cfg.params;
    const double r = std::log2(1.0 + p.base_power / p.noise_power * std::pow(2.0 * cm.cell_area, -0.5 * p.alpha));
    return 9.0 * (cm.nodes_per_cell - 1.0) * cfg.L / r;
}

double random_intra_rate(Variant variant, int k, double N, const SchemeConfig &cfg, double A_or_lambda)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    return bound_rates(cell_model(variant, N, A_or_lambda), k + 1, cfg).cast[static_cast<std::size_t>(k)];
}

double unit_density_rate_shape(double g_prime, double N, double A, double alpha)
{
    return std::log2(1.0 + g_prime * std::pow(A * std::log(N), 1.0 - 0.5 * alpha));
}

double unit_density_regime_split(double N, double alpha)
{
    return std::pow(std::log(N), 0.5 * alpha - 1.0);
}

double density_interference_bound(int k, double lambda, const ChannelParams &params)
{
    const double g = static_cast<double>(cluster_area(k));
    return 8.0 * params.base_power * intra_constant_c2(params.alpha) * lambda * std::pow(g, 1.0 - 0.5 * params.alpha);
}

double density_regime_split(double lambda, const ChannelParams &params)
{
    return std::pow(8.0 * params.base_power * intra_constant_c2(params.alpha) * lambda / params.noise_power,
                    2.0 / (params.alpha - 2.0));
}

double density_cast_rate(int k, double lambda, const ChannelParams &params)
{
    const double tr = k == 0 ? std::pow(8.0, -0.5 * params.alpha) : trace_from_counts(cluster_area(k), params.alpha);
    const double I = density_interference_bound(k, lambda, params);
    return std::log2(1.0 + params.base_power * lambda * tr / (params.noise_power + I));
}

double hop_power_exponent(double alpha)
{
    return alpha / 6.0 - 1.0 / 3.0;
}

RandomSweep random_throughput_sweep(Variant variant, const std::vector<double> &N_grid,
                                    const std::vector<double> &A_or_lambda, const SchemeConfig &cfg, int k_cap)
{
    if (N_grid.size() < 4)
        throw std::invalid_argument("sweep needs at least 4 N values");
    if (A_or_lambda.size() != N_grid.size())
        throw std::invalid_argument("one A or lambda per N");
    const double alpha = cfg.params.alpha;
    RandomSweep s;
    std::vector<std::pair<double, double>> thr, size, pow2;
    for (std::size_t i = 0; i < N_grid.size(); ++i)
    {
        const double N = N_grid[i];
        const auto cm = cell_model(variant, N, A_or_lambda[i]);
        RandomSweepRow row;
        row.N = N;
        row.A_or_lambda = A_or_lambda[i];
        row.search = optimize_cluster_level(cm, cfg, k_cap);
        row.cluster_size = row.search.balance_g * cm.nodes_per_cell;
        const double lnN = std::log(N);
        if (variant == Variant::UnitDensityLogBins)
        {
            thr.emplace_back(N, row.search.best.throughput / std::pow(lnN, (2.0 - alpha) / 6.0));
            size.emplace_back(N, row.cluster_size / std::pow(lnN, (2.0 - alpha) / 3.0));
        }
        else
        {
            thr.emplace_back(A_or_lambda[i] * N, row.search.best.throughput);
            size.emplace_back(N, row.search.balance_g);
        }
        pow2.emplace_back(N, row.search.best.P2);
        s.rows.push_back(std::move(row));
    }
    const bool unit = variant == Variant::UnitDensityLogBins;
    s.throughput = fit_loglog(thr, unit ? "N" : "lambda*N", unit ? "throughput/logfactor" : "throughput");
    s.cluster = fit_loglog(size, "N", unit ? "cluster_nodes/logfactor" : "cluster_area");
    s.power = fit_loglog(pow2, "N", "P2");
    return s;
}

} // namespace coopnet
