// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_GEOMETRY_HPP
#define COOPNET_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace coopnet
{

using NodeId = std::int64_t;

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

double distance(const Vec2 &a, const Vec2 &b);

enum class Topology
{
    RegularCenter,
    RegularUniform,
    WorstCasePair,   // two adjacent clusters, border at x = 0
    WorstCaseCorner, // destination at the origin, every other cell at its far corner
    RandomUnitDensity,
    RandomDensity
};

std::string to_string(Topology t);

struct Node
{
    NodeId id = 0;
    Vec2 pos;
};

// Immutable after construction. Node ids are 0..n-1 in storage order.
struct NetworkInstance
{
    double side_length = 0.0;
    std::vector<Node> nodes;
    Topology topology = Topology::RegularCenter;
    double density = 1.0;   // nodes per unit area
    std::uint64_t seed = 0;
    int level = 0;          // worst-case constructions only

    std::size_t size() const { return nodes.size(); }
    const Vec2 &position(NodeId id) const;
};

enum class RegularMode
{
    Center,
    Uniform
};

// One node per unit square. Throws std::invalid_argument if N is not a perfect square.
NetworkInstance place_regular(std::int64_t N, RegularMode mode, std::uint64_t seed = 0);

// Lemma-style adversarial pair of adjacent level-k clusters. The first g(k) nodes transmit
// (x in -1..-sqrt(g)), the remaining g(k) receive (x in 1..sqrt(g)).
NetworkInstance place_worst_case_pair(int k);
std::vector<NodeId> pair_tx_ids(const NetworkInstance &net);
std::vector<NodeId> pair_rx_ids(const NetworkInstance &net);

// Transmit and receive y-index sets of the worst-case pair, ascending.
std::vector<std::int64_t> pair_tx_rows(std::int64_t root_g);
std::vector<std::int64_t> pair_rx_rows(std::int64_t root_g);

// Level-k cluster of unit cells, destination (id 0) at the origin and every other cell's
// node pushed to the cell corner farthest from it.
NetworkInstance place_worst_case_corner(int k);

// round(lambda * N) iid uniform points on [0, sqrt(N)]^2; lambda = 1 gives unit density.
NetworkInstance place_random(std::int64_t N, double lambda, std::uint64_t seed);

inline std::int64_t cluster_area(int k)
{
    std::int64_t g = 1;
    for (int i = 0; i < k; ++i)
        g *= 9;
    return g;
}

inline std::int64_t pow3(int k)
{
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i)
        r *= 3;
    return r;
}

struct ClusterCoord
{
    int i = 0;
    int j = 0;
    bool operator==(const ClusterCoord &o) const { return i == o.i && j == o.j; }
};

// Nested 3x3 partition. Level 0 cells have side `cell_side`; level k clusters have side
// 3^k * cell_side. Border clusters may be partial when the side is not a power of 3.
class ClusterGrid
{
public:
    ClusterGrid(const NetworkInstance &net, int K, double cell_side = 1.0);

    int levels() const { return K_; }
    double cell_side() const { return cell_side_; }
    double cluster_side(int k) const { return cell_side_ * static_cast<double>(pow3(k)); }
    int per_side(int k) const;
    std::size_t cluster_count(int k) const;

    const std::vector<NodeId> &members(int k, ClusterCoord c) const;
    ClusterCoord cluster_of(int k, NodeId id) const;
    Vec2 center(int k, ClusterCoord c) const;

    // Boundary-touching clusters, clockwise from north (+y).
    std::vector<ClusterCoord> neighbors(int k, ClusterCoord c) const;
    std::vector<ClusterCoord> children(int k, ClusterCoord c) const;

private:
    std::size_t index(int k, ClusterCoord c) const;

    int K_;
    double cell_side_;
    std::vector<int> per_side_;
    std::vector<std::vector<std::vector<NodeId>>> members_;
    std::vector<std::vector<ClusterCoord>> node_cluster_;
};

// Throws std::invalid_argument when 3^K cells do not fit in the area.
ClusterGrid build_cluster_grid(const NetworkInstance &net, int K, double cell_side = 1.0);

struct SquareBin
{
    double nominal_area = 0.0;
    double bin_side = 0.0; // side/per_side, so bins tile exactly
    int per_side = 0;
    std::vector<std::vector<NodeId>> bins; // row-major, index = i + per_side * j

    double bin_area() const { return bin_side * bin_side; }
};

SquareBin bin_nodes(const NetworkInstance &net, double bin_area);

} // namespace coopnet

#endif
