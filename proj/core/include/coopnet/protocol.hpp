// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_PROTOCOL_HPP
#define COOPNET_PROTOCOL_HPP

#include "coopnet/channel.hpp"
#include "coopnet/geometry.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace coopnet
{

enum class Duplex
{
    Full,
    Half
};

enum class RateSource
{
    Bound,
    Simulated
};

std::string to_string(RateSource s);

struct SchemeConfig
{
    double L = 1.0;      // bits per sub-block
    int C_symbols = 1;   // symbols per hop block
    double Q = 2.0;      // bits per quantised observation
    ChannelParams params;
    Duplex duplex = Duplex::Full;
    bool bound_interference = false; // add the tier-sum interference bounds to bound-mode rates

    void validate() const;
};

// `nodes_per_cell` nodes treated as co-located in every base cell of area `cell_area`.
// Regular: 1 node per unit cell. Unit-density random: A ln N nodes per cell of area A ln N.
// Density lambda: lambda nodes per unit cell.
struct CellModel
{
    double area = 1.0;
    double nodes_per_cell = 1.0;
    double cell_area = 1.0;

    static CellModel regular(double N);
    static CellModel unit_density(double N, double A);
    static CellModel density(double N, double lambda);

    double cells() const { return area / cell_area; }
    double cells_per_side() const;
    double nodes() const { return cells() * nodes_per_cell; }
    // Largest K with 3^K cells per side.
    int max_level() const;
};

// cast[k]: rate of a level-k cast (k = 0..K-1); square: pairwise rate inside a base cell;
// decode: MISO rate of the level-K cluster toward its worst destination.
struct RateProfile
{
    std::vector<double> cast;
    double square = 0.0;
    double decode = 0.0;
};

RateProfile bound_rates(const CellModel &cm, int K, const SchemeConfig &cfg);

struct IntraTiming
{
    double total = 0.0;                // all sources: n * sum_k (square + T'^k)
    double square = 0.0;               // per-iteration in-cell dissemination
    std::vector<double> per_iteration; // T'^k, k = 1..K
};

IntraTiming intra_phase_time(const CellModel &cm, int K, const SchemeConfig &cfg, const RateProfile &rates);
IntraTiming intra_phase_time(std::int64_t N, int K, const SchemeConfig &cfg, RateSource source,
                             std::uint64_t seed = 0);

// Aggregate 25 C n sqrt(cells / g).
double inter_phase_time(const CellModel &cm, int K, const SchemeConfig &cfg);
double inter_phase_time(std::int64_t N, int K, const SchemeConfig &cfg);

// 9 n C Q n / R_D.
double decode_phase_time(const CellModel &cm, int K, const SchemeConfig &cfg, const RateProfile &rates);
double decode_phase_time(std::int64_t N, int K, const SchemeConfig &cfg, RateSource source, std::uint64_t seed = 0);

struct ThroughputReport
{
    double N = 0.0;             // area of the network
    int K = 0;
    double g = 0.0;             // cells per level-K cluster
    double cluster_nodes = 0.0; // nodes per level-K cluster
    double T1 = 0.0, T2 = 0.0, T3 = 0.0, t_total = 0.0;
    double throughput = 0.0;
    double delivered_bits = 0.0;
    std::vector<double> per_iteration;
    double P1 = 0.0, P2 = 0.0, P3 = 0.0;
    RateSource mode = RateSource::Bound;
    // Routing detail, simulated runs only.
    double mean_hops = 0.0;
    int max_hops = 0;
    double T2_per_pair_max = 0.0;
};

ThroughputReport assemble_report(const CellModel &cm, int K, const SchemeConfig &cfg, const RateProfile &rates);
ThroughputReport evaluate_bound(const CellModel &cm, int K, const SchemeConfig &cfg);

struct LevelSearch
{
    int K_star = 0;
    ThroughputReport best;
    std::vector<ThroughputReport> candidates; // K = 1..k_max
    double balance_g = 0.0; // cluster area (cells) where T1 + T3 = T2, log-interpolated in g
};

// Cluster area (cells) where ln(T1 + T3) - ln(T2) changes sign, interpolated linearly in ln g;
// extrapolated from the end pair when there is no crossing.
double balance_point(const std::vector<ThroughputReport> &candidates);

LevelSearch optimize_cluster_level(const CellModel &cm, const SchemeConfig &cfg, int k_max);
// Regular network, N = 3^(2K'), K in 1..K'-1.
LevelSearch optimize_cluster_level(std::int64_t N, const SchemeConfig &cfg);

// Log-determinant rates on worst-case geometry with interference measured on `net`.
RateProfile simulated_rates(const NetworkInstance &net, int K, const SchemeConfig &cfg, std::uint64_t seed);

// Random permutation pairing; all three phases with simulated rates on a regular instance.
ThroughputReport end_to_end_run(const NetworkInstance &net, const SchemeConfig &cfg, int K, std::uint64_t pairing_seed);

// Cluster hops |di| + |dj| between the level-K clusters of a and b.
int cluster_hops(const ClusterGrid &grid, int K, NodeId a, NodeId b);

std::vector<NodeId> random_pairing(std::size_t n, std::uint64_t seed);

void write_report_json(std::ostream &os, const ThroughputReport &r, const std::string &config_hash, std::uint64_t seed);

} // namespace coopnet

#endif
