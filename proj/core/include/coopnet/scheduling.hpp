// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_SCHEDULING_HPP
#define COOPNET_SCHEDULING_HPP

#include "coopnet/channel.hpp"
#include "coopnet/geometry.hpp"

#include <map>
#include <ostream>
#include <vector>

namespace coopnet
{

enum class Reuse
{
    Nine = 3,
    TwentyFive = 5
};

inline int reuse_period(Reuse r) { return static_cast<int>(r); }

// slot = (i mod r) + r * (j mod r) over the level-k cluster field.
class TdmaSchedule
{
public:
    TdmaSchedule(Reuse reuse, int level, int per_side);

    Reuse reuse() const { return reuse_; }
    int level() const { return level_; }
    int per_side() const { return per_side_; }
    int slots() const { return reuse_period(reuse_) * reuse_period(reuse_); }
    int slot_of(ClusterCoord c) const;
    std::vector<ClusterCoord> active_set(int slot) const;

private:
    Reuse reuse_;
    int level_;
    int per_side_;
};

TdmaSchedule make_schedule(const ClusterGrid &grid, int level, Reuse reuse);

void write_schedule_csv(std::ostream &os, const TdmaSchedule &s, const std::string &config_hash,
                        std::uint64_t seed);

// 8a for a >= 1, 0 for a = 0; throws for a < 0.
int tier_interferer_count(int a);

// Lattice tier of a co-slot cluster: max(|di|, |dj|) / r.
int lattice_tier(ClusterCoord a, ClusterCoord b, Reuse reuse);

// Euclidean gap between two level-k cluster squares (0 when they touch).
double boundary_distance(double cluster_side, ClusterCoord a, ClusterCoord b);

struct InterferenceBound
{
    double finite_sum = 0.0; // truncated tier sum
    double limit = 0.0;      // closed-form constant bound
    std::int64_t tiers = 0;
};

// Tail constants of the tier sums: sum_a a/(3a-2)^alpha <= c2, sum_a a/(4a-2)^alpha <= c4.
double intra_constant_c2(double alpha);
double inter_constant_c4(double alpha);

// 8 P g^(1-alpha/2) sum_{a=1}^{ceil(sqrt(N/g)/3)} a/(3a-2)^alpha and its limit 8 c2 P g^(1-alpha/2).
InterferenceBound intra_interference_bound(int k, double N, const ChannelParams &params);

// 8 P2 g^(1-alpha/2) sum_{a=1}^{ceil(sqrt(N/g)/5)} a/(4a-2)^alpha with P2 = 2^alpha P g^(alpha/2-1);
// the limit 8 c4 2^alpha P does not depend on g.
InterferenceBound inter_interference_bound(int K, double N, const ChannelParams &params);

double hop_power(int K, const ChannelParams &params);

struct InterferenceReport
{
    std::map<NodeId, double> per_node_power;
    double max_power = 0.0;
    double bound = 0.0;
};

// Power-sum interference at every node of rx_cluster from all nodes of the co-slot clusters,
// excluding the intended transmit cluster (defaults to rx_cluster itself).
InterferenceReport exact_interference(const NetworkInstance &net, const ClusterGrid &grid, const TdmaSchedule &schedule,
                                      int active_slot, ClusterCoord rx_cluster, double tx_power, double alpha,
                                      const ClusterCoord *intended_tx = nullptr);

// Worst receiver over every active cluster of every slot.
double max_exact_interference(const NetworkInstance &net, const ClusterGrid &grid, const TdmaSchedule &schedule,
                              double tx_power, double alpha);

void write_interference_json(std::ostream &os, const InterferenceReport &r, const std::string &config_hash,
                             std::uint64_t seed);

} // namespace coopnet

#endif
