// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/protocol.hpp"
#include "coopnet/io.hpp"
#include "coopnet/rates.hpp"
#include "coopnet/rng.hpp"
#include "coopnet/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace coopnet
{

std::string to_string(RateSource s)
{
    return s == RateSource::Bound ? "bound" : "simulated";
}

void SchemeConfig::validate() const
{
    if (!(L >= 1.0))
        throw std::invalid_argument("L must be >= 1");
    if (C_symbols < 1)
        throw std::invalid_argument("C must be >= 1");
    if (!(Q >= 1.0))
        throw std::invalid_argument("Q must be >= 1");
    params.validate();
}

CellModel CellModel::regular(double N)
{
    return {N, 1.0, 1.0};
}

CellModel CellModel::unit_density(double N, double A)
{
    if (!(A > 1.0))
        throw std::invalid_argument("A must be > 1");
    const double m = A * std::log(N);
    return {N, m, m};
}

CellModel CellModel::density(double N, double lambda)
{
    if (!(lambda >= 1.0))
        throw std::invalid_argument("lambda must be >= 1");
    return {N, lambda, 1.0};
}

double CellModel::cells_per_side() const
{
    return std::sqrt(cells());
}

int CellModel::max_level() const
{
    const double side = cells_per_side();
    int k = 0;
    while (std::pow(3.0, k + 1) <= side * (1.0 + 1e-12))
        ++k;
    return k;
}

namespace
{
double level_area(int k)
{
    return static_cast<double>(cluster_area(k));
}

// Tr(H H*) of the worst-case level-k cast on unit cells.
double worst_trace(int k, double alpha)
{
    if (k == 0)
        return std::pow(8.0, -0.5 * alpha); // diagonal neighbours, far corners
    return trace_from_counts(cluster_area(k), alpha);
}

// Received-power scale of a cell holding m co-located nodes, distances scaled by sqrt(s2).
double cell_scale(const CellModel &cm, double alpha)
{
    return cm.nodes_per_cell * std::pow(cm.cell_area, -0.5 * alpha);
}

double bound_interference(const CellModel &cm, int k, const SchemeConfig &cfg)
{
    if (!cfg.bound_interference)
        return 0.0;
    return cell_scale(cm, cfg.params.alpha) * intra_interference_bound(k, cm.cells(), cfg.params).finite_sum;
}

double square_rate(const CellModel &cm, const ChannelParams &p)
{
    return std::log2(1.0 + p.base_power / p.noise_power * std::pow(2.0 * cm.cell_area, -0.5 * p.alpha));
}
} // namespace

RateProfile bound_rates(const CellModel &cm, int K, const SchemeConfig &cfg)
{
    cfg.validate();
    if (K < 1)
        throw std::invalid_argument("K must be >= 1");
    const auto &p = cfg.params;
    const double scale = cell_scale(cm, p.alpha);
    RateProfile r;
    r.cast.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k)
    {
        const double I = bound_interference(cm, k + 1, cfg);
        r.cast[static_cast<std::size_t>(k)] =
            std::log2(1.0 + p.base_power / (p.noise_power + I) * scale * worst_trace(k, p.alpha));
    }
    r.square = square_rate(cm, p);
    const auto root = static_cast<std::int64_t>(pow3(K));
    const double I = bound_interference(cm, K, cfg);
    r.decode = std::log2(1.0 + p.base_power / (p.noise_power + I) * scale * miso_series(p.alpha, root - 1));
    return r;
}

IntraTiming intra_phase_time(const CellModel &cm, int K, const SchemeConfig &cfg, const RateProfile &rates)
{
    if (K < 1 || rates.cast.size() < static_cast<std::size_t>(K))
        throw std::invalid_argument("rate profile shorter than K");
    const double m = cm.nodes_per_cell;
    IntraTiming t;
    t.square = m > 1.0 ? 9.0 * (m - 1.0) * cfg.L / rates.square : 0.0;
    t.per_iteration.reserve(static_cast<std::size_t>(K));
    double prev = 8.0 * m * cfg.L / rates.cast[0];
    t.per_iteration.push_back(prev);
    for (int k = 2; k <= K; ++k)
    {
        const double cast = 9.0 * m * level_area(k - 1) * cfg.L / rates.cast[static_cast<std::size_t>(k - 1)];
        prev = cfg.duplex == Duplex::Full ? std::max(cast, 9.0 * prev) : cast + 9.0 * prev;
        t.per_iteration.push_back(prev);
    }
    const double n = m * level_area(K);
    double sum = 0.0;
    for (double v : t.per_iteration)
        sum += v + t.square;
    t.total = n * sum;
    return t;
}

double inter_phase_time(const CellModel &cm, int K, const SchemeConfig &cfg)
{
    const double g = level_area(K);
    return 25.0 * cfg.C_symbols * cm.nodes_per_cell * g * std::sqrt(cm.cells() / g);
}

double decode_phase_time(const CellModel &cm, int K, const SchemeConfig &cfg, const RateProfile &rates)
{
    const double n = cm.nodes_per_cell * level_area(K);
    return 9.0 * n * cfg.C_symbols * cfg.Q * n / rates.decode;
}

ThroughputReport assemble_report(const CellModel &cm, int K, const SchemeConfig &cfg, const RateProfile &rates)
{
    ThroughputReport r;
    r.N = cm.area;
    r.K = K;
    r.g = level_area(K);
    r.cluster_nodes = cm.nodes_per_cell * r.g;
    const auto intra = intra_phase_time(cm, K, cfg, rates);
    r.T1 = intra.total;
    r.per_iteration = intra.per_iteration;
    r.T2 = inter_phase_time(cm, K, cfg);
    r.T3 = decode_phase_time(cm, K, cfg, rates);
    r.t_total = r.T1 + r.T2 + r.T3;
    r.delivered_bits = cm.nodes() * r.cluster_nodes * cfg.L;
    r.throughput = r.delivered_bits / r.t_total;
    const auto &p = cfg.params;
    r.P1 = r.P3 = p.base_power;
    r.P2 = std::pow(2.0, p.alpha) * p.base_power * std::pow(cm.cell_area * r.g, 0.5 * p.alpha - 1.0);
    return r;
}

ThroughputReport evaluate_bound(const CellModel &cm, int K, const SchemeConfig &cfg)
{
    return assemble_report(cm, K, cfg, bound_rates(cm, K, cfg));
}

double balance_point(const std::vector<ThroughputReport> &c)
{
    if (c.empty())
        throw std::invalid_argument("no candidates");
    if (c.size() == 1)
        return c.front().g;
    std::vector<double> lg, diff;
    for (const auto &r : c)
    {
        lg.push_back(std::log(r.g));
        diff.push_back(std::log(r.T1 + r.T3) - std::log(r.T2));
    }
    std::size_t i = 0;
    bool found = false;
    for (; i + 1 < c.size(); ++i)
        if (diff[i] <= 0.0 && diff[i + 1] >= 0.0)
        {
            found = true;
            break;
        }
    if (!found)
        i = diff.front() > 0.0 ? 0 : c.size() - 2;
    const double t = diff[i] / (diff[i] - diff[i + 1]);
    return std::exp(lg[i] + t * (lg[i + 1] - lg[i]));
}

LevelSearch optimize_cluster_level(const CellModel &cm, const SchemeConfig &cfg, int k_max)
{
    k_max = std::min(k_max, cm.max_level());
    if (k_max < 1)
        throw std::invalid_argument("network too small for a level-1 cluster");
    LevelSearch s;
    for (int K = 1; K <= k_max; ++K)
        s.candidates.push_back(evaluate_bound(cm, K, cfg));
    auto best = std::max_element(s.candidates.begin(), s.candidates.end(),
                                 [](const auto &a, const auto &b) { return a.throughput < b.throughput; });
    s.best = *best;
    s.K_star = best->K;
    s.balance_g = balance_point(s.candidates);
    return s;
}

LevelSearch optimize_cluster_level(std::int64_t N, const SchemeConfig &cfg)
{
    const auto cm = CellModel::regular(static_cast<double>(N));
    const int top = cm.max_level();
    if (top < 2 || static_cast<std::int64_t>(cluster_area(top)) != N)
        throw std::invalid_argument("N must be 3^(2K') with K' >= 2");
    return optimize_cluster_level(cm, cfg, top - 1);
}

// ---- simulated mode ----

namespace
{
struct SimulatedState
{
    RateProfile rates;
    double decode_interference = 0.0;
};

SimulatedState simulate(const NetworkInstance &net, const ClusterGrid &grid, int K, const SchemeConfig &cfg,
                        std::uint64_t seed)
{
    const auto &p = cfg.params;
    SimulatedState st;
    st.rates.cast.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k)
    {
        const auto sched = make_schedule(grid, k + 1, Reuse::Nine);
        const double I = max_exact_interference(net, grid, sched, p.base_power, p.alpha);
        double rate;
        if (k == 0)
            rate = std::log2(1.0 + p.base_power / (p.noise_power + I) * worst_trace(0, p.alpha));
        else
        {
            const auto pair = place_worst_case_pair(k);
            const auto H = build_channel_matrix(pair, pair_tx_ids(pair), pair_rx_ids(pair), p.alpha,
                                                derive_seed(seed, static_cast<std::uint64_t>(k)));
            rate = mimo_rate(H.entries, p.base_power, p.noise_power, I).exact_logdet;
        }
        st.rates.cast[static_cast<std::size_t>(k)] = rate;
    }
    st.rates.square = square_rate(CellModel::regular(net.side_length * net.side_length), p);
    st.decode_interference = max_exact_interference(net, grid, make_schedule(grid, K, Reuse::Nine), p.base_power, p.alpha);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto &node : net.nodes)
        worst = std::min(worst, miso_rate(net, grid, K, node.id, p, st.decode_interference));
    st.rates.decode = worst;
    return st;
}

// 9 * max over clusters of sum over destinations of C Q g / R_D(dest).
double simulated_decode_time(const NetworkInstance &net, const ClusterGrid &grid, int K, const SchemeConfig &cfg,
                             double interference)
{
    const double g = level_area(K);
    double worst = 0.0;
    const int n = grid.per_side(K);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
        {
            double t = 0.0;
            for (auto d : grid.members(K, {i, j}))
                t += cfg.C_symbols * cfg.Q * g / miso_rate(net, grid, K, d, cfg.params, interference);
            worst = std::max(worst, t);
        }
    return 9.0 * worst;
}

void require_regular(const NetworkInstance &net)
{
    if (net.topology != Topology::RegularCenter && net.topology != Topology::RegularUniform)
        throw std::invalid_argument("simulated timing needs a regular instance");
}
} // namespace

RateProfile simulated_rates(const NetworkInstance &net, int K, const SchemeConfig &cfg, std::uint64_t seed)
{
    cfg.validate();
    require_regular(net);
    const auto grid = build_cluster_grid(net, K);
    return simulate(net, grid, K, cfg, seed).rates;
}

IntraTiming intra_phase_time(std::int64_t N, int K, const SchemeConfig &cfg, RateSource source, std::uint64_t seed)
{
    const auto cm = CellModel::regular(static_cast<double>(N));
    if (source == RateSource::Bound)
        return intra_phase_time(cm, K, cfg, bound_rates(cm, K, cfg));
    const auto net = place_regular(N, RegularMode::Center, seed);
    return intra_phase_time(cm, K, cfg, simulated_rates(net, K, cfg, seed));
}

double inter_phase_time(std::int64_t N, int K, const SchemeConfig &cfg)
{
    return inter_phase_time(CellModel::regular(static_cast<double>(N)), K, cfg);
}

double decode_phase_time(std::int64_t N, int K, const SchemeConfig &cfg, RateSource source, std::uint64_t seed)
{
    const auto cm = CellModel::regular(static_cast<double>(N));
    if (source == RateSource::Bound)
        return decode_phase_time(cm, K, cfg, bound_rates(cm, K, cfg));
    cfg.validate();
    const auto net = place_regular(N, RegularMode::Center, seed);
    const auto grid = build_cluster_grid(net, K);
    const double I =
        max_exact_interference(net, grid, make_schedule(grid, K, Reuse::Nine), cfg.params.base_power, cfg.params.alpha);
    return simulated_decode_time(net, grid, K, cfg, I);
}

int cluster_hops(const ClusterGrid &grid, int K, NodeId a, NodeId b)
{
    const auto ca = grid.cluster_of(K, a), cb = grid.cluster_of(K, b);
    return std::abs(ca.i - cb.i) + std::abs(ca.j - cb.j);
}

std::vector<NodeId> random_pairing(std::size_t n, std::uint64_t seed)
{
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    Rng rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

ThroughputReport end_to_end_run(const NetworkInstance &net, const SchemeConfig &cfg, int K, std::uint64_t pairing_seed)
{
    cfg.validate();
    require_regular(net);
    const auto grid = build_cluster_grid(net, K);
    const auto st = simulate(net, grid, K, cfg, derive_seed(pairing_seed, 1));
    const auto cm = CellModel::regular(net.side_length * net.side_length);

    ThroughputReport r = assemble_report(cm, K, cfg, st.rates);
    r.mode = RateSource::Simulated;

    const auto dest = random_pairing(net.size(), derive_seed(pairing_seed, 0));
    double hops = 0.0;
    for (std::size_t s = 0; s < dest.size(); ++s)
    {
        const int h = cluster_hops(grid, K, static_cast<NodeId>(s), dest[s]);
        hops += h;
        r.max_hops = std::max(r.max_hops, h);
    }
    r.mean_hops = dest.empty() ? 0.0 : hops / static_cast<double>(dest.size());
    r.T2 = 25.0 * cfg.C_symbols * r.g * r.mean_hops;
    r.T2_per_pair_max = 25.0 * cfg.C_symbols * r.max_hops;
    r.T3 = simulated_decode_time(net, grid, K, cfg, st.decode_interference);
    r.t_total = r.T1 + r.T2 + r.T3;
    r.throughput = r.delivered_bits / r.t_total;
    return r;
}

void write_report_json(std::ostream &os, const ThroughputReport &r, const std::string &config_hash, std::uint64_t seed)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["mode"] = to_string(r.mode);
    j["N"] = r.N;
    j["K"] = r.K;
    j["g"] = r.g;
    j["cluster_nodes"] = r.cluster_nodes;
    j["T1"] = r.T1;
    j["T2"] = r.T2;
    j["T3"] = r.T3;
    j["t_total"] = r.t_total;
    j["throughput"] = r.throughput;
    j["delivered_bits"] = r.delivered_bits;
    j["per_iteration"] = r.per_iteration;
    j["powers"] = {{"P1", r.P1}, {"P2", r.P2}, {"P3", r.P3}};
    if (r.mode == RateSource::Simulated)
    {
        j["mean_hops"] = r.mean_hops;
        j["max_hops"] = r.max_hops;
        j["T2_per_pair_max"] = r.T2_per_pair_max;
    }
    os << j.dump(2) << '\n';
}

} // namespace coopnet
