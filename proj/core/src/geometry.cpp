// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/geometry.hpp"
#include "coopnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopnet
{

double distance(const Vec2 &a, const Vec2 &b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::string to_string(Topology t)
{
    switch (t)
    {
    case Topology::RegularCenter:
        return "regular_center";
    case Topology::RegularUniform:
        return "regular_uniform";
    case Topology::WorstCasePair:
        return "worst_case_pair";
    case Topology::WorstCaseCorner:
        return "worst_case_corner";
    case Topology::RandomUnitDensity:
        return "random_unit_density";
    case Topology::RandomDensity:
        return "random_density";
    }
    return "unknown";
}

const Vec2 &NetworkInstance::position(NodeId id) const
{
    if (id < 0 || static_cast<std::size_t>(id) >= nodes.size())
        throw std::out_of_range("node id " + std::to_string(id) + " not in network");
    return nodes[static_cast<std::size_t>(id)].pos;
}

static std::int64_t exact_root(std::int64_t N)
{
    if (N < 1)
        throw std::invalid_argument("N must be positive");
    auto m = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(N))));
    while (m * m > N)
        --m;
    while ((m + 1) * (m + 1) <= N)
        ++m;
    if (m * m != N)
        throw std::invalid_argument("N = " + std::to_string(N) + " is not a perfect square");
    return m;
}

NetworkInstance place_regular(std::int64_t N, RegularMode mode, std::uint64_t seed)
{
    const std::int64_t m = exact_root(N);
    NetworkInstance net;
    net.side_length = static_cast<double>(m);
    net.topology = mode == RegularMode::Center ? Topology::RegularCenter : Topology::RegularUniform;
    net.seed = seed;
    net.nodes.reserve(static_cast<std::size_t>(N));

    Rng rng(seed);
    NodeId id = 0;
    for (std::int64_t j = 0; j < m; ++j)
        for (std::int64_t i = 0; i < m; ++i)
        {
            double ox = 0.5, oy = 0.5;
            if (mode == RegularMode::Uniform)
            {
                ox = rng.uniform();
                oy = rng.uniform();
            }
            net.nodes.push_back({id++, {static_cast<double>(i) + ox, static_cast<double>(j) + oy}});
        }
    return net;
}

std::vector<std::int64_t> pair_tx_rows(std::int64_t root_g)
{
    std::vector<std::int64_t> rows;
    for (std::int64_t y = 1; y <= root_g + 1; ++y)
        if (2 * y != root_g + 1)
            rows.push_back(y);
    return rows;
}

std::vector<std::int64_t> pair_rx_rows(std::int64_t root_g)
{
    std::vector<std::int64_t> rows;
    for (std::int64_t y = 1; y <= root_g + 1; ++y)
        if (2 * y != root_g + 3)
            rows.push_back(y);
    return rows;
}

NetworkInstance place_worst_case_pair(int k)
{
    if (k < 0)
        throw std::invalid_argument("worst-case pair requires k >= 0");
    const std::int64_t s = pow3(k);
    NetworkInstance net;
    net.side_length = 2.0 * static_cast<double>(s);
    net.topology = Topology::WorstCasePair;
    net.level = k;
    net.nodes.reserve(static_cast<std::size_t>(2 * s * s));

    NodeId id = 0;
    for (auto y : pair_tx_rows(s))
        for (std::int64_t x = 1; x <= s; ++x)
            net.nodes.push_back({id++, {-static_cast<double>(x), static_cast<double>(y)}});
    for (auto y : pair_rx_rows(s))
        for (std::int64_t x = 1; x <= s; ++x)
            net.nodes.push_back({id++, {static_cast<double>(x), static_cast<double>(y)}});
    return net;
}

std::vector<NodeId> pair_tx_ids(const NetworkInstance &net)
{
    if (net.topology != Topology::WorstCasePair)
        throw std::invalid_argument("not a worst-case pair instance");
    std::vector<NodeId> ids(net.size() / 2);
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = static_cast<NodeId>(i);
    return ids;
}

std::vector<NodeId> pair_rx_ids(const NetworkInstance &net)
{
    if (net.topology != Topology::WorstCasePair)
        throw std::invalid_argument("not a worst-case pair instance");
    const std::size_t half = net.size() / 2;
    std::vector<NodeId> ids(half);
    for (std::size_t i = 0; i < half; ++i)
        ids[i] = static_cast<NodeId>(half + i);
    return ids;
}

NetworkInstance place_worst_case_corner(int k)
{
    if (k < 0)
        throw std::invalid_argument("worst-case corner requires k >= 0");
    const std::int64_t s = pow3(k);
    NetworkInstance net;
    net.side_length = static_cast<double>(s);
    net.topology = Topology::WorstCaseCorner;
    net.level = k;
    net.nodes.reserve(static_cast<std::size_t>(s * s));
    net.nodes.push_back({0, {0.0, 0.0}});
    NodeId id = 1;
    for (std::int64_t j = 0; j < s; ++j)
        for (std::int64_t i = 0; i < s; ++i)
            if (i != 0 || j != 0)
                net.nodes.push_back({id++, {static_cast<double>(i + 1), static_cast<double>(j + 1)}});
    return net;
}

NetworkInstance place_random(std::int64_t N, double lambda, std::uint64_t seed)
{
    if (N < 1)
        throw std::invalid_argument("N must be positive");
    if (!(lambda >= 1.0))
        throw std::invalid_argument("density must be >= 1");
    NetworkInstance net;
    net.side_length = std::sqrt(static_cast<double>(N));
    net.topology = lambda == 1.0 ? Topology::RandomUnitDensity : Topology::RandomDensity;
    net.density = lambda;
    net.seed = seed;
    const auto n = static_cast<std::int64_t>(std::llround(lambda * static_cast<double>(N)));
    net.nodes.reserve(static_cast<std::size_t>(n));
    Rng rng(seed);
    for (NodeId id = 0; id < n; ++id)
    {
        const double x = rng.uniform(0.0, net.side_length);
        const double y = rng.uniform(0.0, net.side_length);
        net.nodes.push_back({id, {x, y}});
    }
    return net;
}

// ---- ClusterGrid ----

ClusterGrid::ClusterGrid(const NetworkInstance &net, int K, double cell_side) : K_(K), cell_side_(cell_side)
{
    if (K < 0)
        throw std::invalid_argument("cluster levels must be >= 0");
    if (!(cell_side > 0.0))
        throw std::invalid_argument("cell side must be positive");
    const double cells = net.side_length / cell_side;
    const auto top = static_cast<double>(pow3(K));
    if (cells + 1e-9 < top)
        throw std::invalid_argument("K = " + std::to_string(K) + " too large for side " +
                                    std::to_string(net.side_length));

    per_side_.resize(static_cast<std::size_t>(K + 1));
    members_.resize(static_cast<std::size_t>(K + 1));
    node_cluster_.resize(static_cast<std::size_t>(K + 1));
    for (int k = 0; k <= K; ++k)
    {
        const double w = cluster_side(k);
        const int n = std::max(1, static_cast<int>(std::ceil(net.side_length / w - 1e-9)));
        per_side_[static_cast<std::size_t>(k)] = n;
        auto &mem = members_[static_cast<std::size_t>(k)];
        auto &own = node_cluster_[static_cast<std::size_t>(k)];
        mem.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
        own.resize(net.size());
        for (const auto &node : net.nodes)
        {
            ClusterCoord c{std::clamp(static_cast<int>(std::floor(node.pos.x / w)), 0, n - 1),
                           std::clamp(static_cast<int>(std::floor(node.pos.y / w)), 0, n - 1)};
            own[static_cast<std::size_t>(node.id)] = c;
            mem[index(k, c)].push_back(node.id);
        }
    }
}

int ClusterGrid::per_side(int k) const
{
    if (k < 0 || k > K_)
        throw std::out_of_range("cluster level out of range");
    return per_side_[static_cast<std::size_t>(k)];
}

std::size_t ClusterGrid::cluster_count(int k) const
{
    const auto n = static_cast<std::size_t>(per_side(k));
    return n * n;
}

std::size_t ClusterGrid::index(int k, ClusterCoord c) const
{
    const int n = per_side(k);
    if (c.i < 0 || c.j < 0 || c.i >= n || c.j >= n)
        throw std::out_of_range("cluster coordinate out of range");
    return static_cast<std::size_t>(c.i) + static_cast<std::size_t>(n) * static_cast<std::size_t>(c.j);
}

const std::vector<NodeId> &ClusterGrid::members(int k, ClusterCoord c) const
{
    return members_[static_cast<std::size_t>(k)][index(k, c)];
}

ClusterCoord ClusterGrid::cluster_of(int k, NodeId id) const
{
    per_side(k);
    return node_cluster_[static_cast<std::size_t>(k)].at(static_cast<std::size_t>(id));
}

Vec2 ClusterGrid::center(int k, ClusterCoord c) const
{
    const double w = cluster_side(k);
    return {(c.i + 0.5) * w, (c.j + 0.5) * w};
}

std::vector<ClusterCoord> ClusterGrid::neighbors(int k, ClusterCoord c) const
{
    static constexpr int di[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    static constexpr int dj[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    const int n = per_side(k);
    std::vector<ClusterCoord> out;
    for (int t = 0; t < 8; ++t)
    {
        ClusterCoord q{c.i + di[t], c.j + dj[t]};
        if (q.i >= 0 && q.j >= 0 && q.i < n && q.j < n)
            out.push_back(q);
    }
    return out;
}

std::vector<ClusterCoord> ClusterGrid::children(int k, ClusterCoord c) const
{
    if (k < 1)
        throw std::invalid_argument("level-0 cells have no children");
    index(k, c);
    const int n = per_side(k - 1);
    std::vector<ClusterCoord> out;
    for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a)
        {
            ClusterCoord q{3 * c.i + a, 3 * c.j + b};
            if (q.i < n && q.j < n)
                out.push_back(q);
        }
    return out;
}

ClusterGrid build_cluster_grid(const NetworkInstance &net, int K, double cell_side)
{
    return ClusterGrid(net, K, cell_side);
}

SquareBin bin_nodes(const NetworkInstance &net, double bin_area)
{
    if (!(bin_area > 0.0))
        throw std::invalid_argument("bin area must be positive");
    SquareBin out;
    out.nominal_area = bin_area;
    out.per_side = std::max(1, static_cast<int>(std::floor(net.side_length / std::sqrt(bin_area) + 1e-9)));
    out.bin_side = net.side_length / out.per_side;
    out.bins.assign(static_cast<std::size_t>(out.per_side) * static_cast<std::size_t>(out.per_side), {});
    for (const auto &node : net.nodes)
    {
        const int i = std::clamp(static_cast<int>(std::floor(node.pos.x / out.bin_side)), 0, out.per_side - 1);
        const int j = std::clamp(static_cast<int>(std::floor(node.pos.y / out.bin_side)), 0, out.per_side - 1);
        out.bins[static_cast<std::size_t>(i) + static_cast<std::size_t>(out.per_side) * static_cast<std::size_t>(j)]
            .push_back(node.id);
    }
    return out;
}

} // namespace coopnet
