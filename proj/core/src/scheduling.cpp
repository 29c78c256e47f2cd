// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/scheduling.hpp"
#include "coopnet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <json.hpp>

namespace coopnet
{

TdmaSchedule::TdmaSchedule(Reuse reuse, int level, int per_side) : reuse_(reuse), level_(level), per_side_(per_side)
{
    if (per_side < 1)
        throw std::invalid_argument("schedule needs at least one cluster per side");
}

int TdmaSchedule::slot_of(ClusterCoord c) const
{
    const int r = reuse_period(reuse_);
    return (c.i % r) + r * (c.j % r);
}

std::vector<ClusterCoord> TdmaSchedule::active_set(int slot) const
{
    if (slot < 0 || slot >= slots())
        throw std::out_of_range("slot out of range");
    const int r = reuse_period(reuse_);
    std::vector<ClusterCoord> out;
    for (int j = slot / r; j < per_side_; j += r)
        for (int i = slot % r; i < per_side_; i += r)
            out.push_back({i, j});
    return out;
}

TdmaSchedule make_schedule(const ClusterGrid &grid, int level, Reuse reuse)
{
    if (level < 0 || level > grid.levels())
        throw std::invalid_argument("schedule level exceeds grid depth");
    return TdmaSchedule(reuse, level, grid.per_side(level));
}

void write_schedule_csv(std::ostream &os, const TdmaSchedule &s, const std::string &config_hash, std::uint64_t seed)
{
    CsvWriter csv(os, {"level", "i", "j", "slot"}, config_hash, seed);
    for (int j = 0; j < s.per_side(); ++j)
        for (int i = 0; i < s.per_side(); ++i)
            csv.row({std::to_string(s.level()), std::to_string(i), std::to_string(j),
                     std::to_string(s.slot_of({i, j}))});
}

int tier_interferer_count(int a)
{
    if (a < 0)
        throw std::invalid_argument("tier index must be >= 0");
    return 8 * a;
}

int lattice_tier(ClusterCoord a, ClusterCoord b, Reuse reuse)
{
    return std::max(std::abs(a.i - b.i), std::abs(a.j - b.j)) / reuse_period(reuse);
}

double boundary_distance(double cluster_side, ClusterCoord a, ClusterCoord b)
{
    const double gx = std::max(0, std::abs(a.i - b.i) - 1) * cluster_side;
    const double gy = std::max(0, std::abs(a.j - b.j) - 1) * cluster_side;
    return std::hypot(gx, gy);
}

double intra_constant_c2(double alpha)
{
    if (!(alpha > 2.0))
        throw std::invalid_argument("alpha must be > 2");
    return 1.0 + 1.0 / (9.0 * (alpha - 2.0));
}

double inter_constant_c4(double alpha)
{
    if (!(alpha > 2.0))
        throw std::invalid_argument("alpha must be > 2");
    return 1.0 + std::pow(2.0, -alpha) / (alpha - 2.0);
}

namespace
{
// sum_{a=1}^{tiers} a / (slope*a - offset)^alpha. Terms past kExplicitTiers use the
// midpoint integral; the relative error there is below 1e-12 for alpha > 2.
constexpr std::int64_t kExplicitTiers = 1 << 16;

double tier_antiderivative(double x, double slope, double offset, double alpha)
{
    const double u = slope * x - offset;
    return (std::pow(u, 2.0 - alpha) / (2.0 - alpha) + offset * std::pow(u, 1.0 - alpha) / (1.0 - alpha)) /
           (slope * slope);
}

double tier_sum(std::int64_t tiers, double slope, double offset, double alpha)
{
    double s = 0.0;
    if (tiers > kExplicitTiers)
        s = tier_antiderivative(static_cast<double>(tiers) + 0.5, slope, offset, alpha) -
            tier_antiderivative(static_cast<double>(kExplicitTiers) + 0.5, slope, offset, alpha);
    for (std::int64_t a = std::min(tiers, kExplicitTiers); a >= 1; --a)
        s += static_cast<double>(a) * std::pow(slope * static_cast<double>(a) - offset, -alpha);
    return s;
}

std::int64_t tier_count(double N, double g, int r)
{
    const double t = std::ceil(std::sqrt(N / g) / r - 1e-12);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::min(t, 9.0e15)));
}
} // namespace

InterferenceBound intra_interference_bound(int k, double N, const ChannelParams &params)
{
    params.validate();
    const double g = static_cast<double>(cluster_area(k));
    const double scale = 8.0 * params.base_power * std::pow(g, 1.0 - 0.5 * params.alpha);
    InterferenceBound b;
    b.tiers = tier_count(N, g, 3);
    b.finite_sum = scale * tier_sum(b.tiers, 3.0, 2.0, params.alpha);
    b.limit = scale * intra_constant_c2(params.alpha);
    return b;
}

double hop_power(int K, const ChannelParams &params)
{
    const double g = static_cast<double>(cluster_area(K));
    return std::pow(2.0, params.alpha) * params.base_power * std::pow(g, 0.5 * params.alpha - 1.0);
}

InterferenceBound inter_interference_bound(int K, double N, const ChannelParams &params)
{
    params.validate();
    const double g = static_cast<double>(cluster_area(K));
    const double scale = 8.0 * hop_power(K, params) * std::pow(g, 1.0 - 0.5 * params.alpha);
    InterferenceBound b;
    b.tiers = tier_count(N, g, 5);
    b.finite_sum = scale * tier_sum(b.tiers, 4.0, 2.0, params.alpha);
    b.limit = 8.0 * inter_constant_c4(params.alpha) * std::pow(2.0, params.alpha) * params.base_power;
    return b;
}

namespace
{
// Bound on the worst receiver for one node per unit area of the cluster square.
double schedule_bound(const NetworkInstance &net, const ClusterGrid &grid, const TdmaSchedule &schedule,
                      double tx_power, double alpha)
{
    const double g = std::pow(grid.cluster_side(schedule.level()), 2.0);
    const double N = net.side_length * net.side_length;
    const double scale = 8.0 * tx_power * std::pow(g, 1.0 - 0.5 * alpha);
    if (schedule.reuse() == Reuse::Nine)
        return scale * tier_sum(tier_count(N, g, 3), 3.0, 2.0, alpha);
    return scale * tier_sum(tier_count(N, g, 5), 4.0, 2.0, alpha);
}

inline double path_gain(const Vec2 &a, const Vec2 &b, double alpha)
{
    const double dx = a.x - b.x, dy = a.y - b.y;
    return std::pow(dx * dx + dy * dy, -0.5 * alpha);
}
} // namespace

InterferenceReport exact_interference(const NetworkInstance &net, const ClusterGrid &grid, const TdmaSchedule &schedule,
                                      int active_slot, ClusterCoord rx_cluster, double tx_power, double alpha,
                                      const ClusterCoord *intended_tx)
{
    const int k = schedule.level();
    const ClusterCoord own = intended_tx ? *intended_tx : rx_cluster;
    if (!intended_tx && schedule.slot_of(rx_cluster) != active_slot)
        throw std::invalid_argument("rx cluster is not active in this slot");

    std::vector<NodeId> interferers;
    for (const auto &c : schedule.active_set(active_slot))
    {
        if (c == own || c == rx_cluster)
            continue;
        const auto &m = grid.members(k, c);
        interferers.insert(interferers.end(), m.begin(), m.end());
    }

    InterferenceReport r;
    for (auto j : grid.members(k, rx_cluster))
    {
        const Vec2 &pj = net.position(j);
        double s = 0.0;
        for (auto i : interferers)
            s += path_gain(net.position(i), pj, alpha);
        s *= tx_power;
        r.per_node_power[j] = s;
        r.max_power = std::max(r.max_power, s);
    }
    r.bound = schedule_bound(net, grid, schedule, tx_power, alpha);
    return r;
}

double max_exact_interference(const NetworkInstance &net, const ClusterGrid &grid, const TdmaSchedule &schedule,
                              double tx_power, double alpha)
{
    double worst = 0.0;
    for (int slot = 0; slot < schedule.slots(); ++slot)
        for (const auto &c : schedule.active_set(slot))
            worst = std::max(worst, exact_interference(net, grid, schedule, slot, c, tx_power, alpha).max_power);
    return worst;
}

void write_interference_json(std::ostream &os, const InterferenceReport &r, const std::string &config_hash,
                             std::uint64_t seed)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["max_power"] = r.max_power;
    j["bound"] = r.bound;
    auto &per = j["per_node_power"] = nlohmann::ordered_json::object();
    for (const auto &[id, p] : r.per_node_power)
        per[std::to_string(id)] = p;
    os << j.dump(2) << '\n';
}

} // namespace coopnet
