// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_CHANNEL_HPP
#define COOPNET_CHANNEL_HPP

#include "coopnet/geometry.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <ostream>
#include <vector>

namespace coopnet
{

struct ChannelParams
{
    double alpha = 4.0;         // path-loss exponent, > 2
    double noise_power = 1e-4;  // N0
    double base_power = 1.0;    // P

    void validate() const; // throws std::invalid_argument
};

using CMatrix = Eigen::MatrixXcd;

// entries(j, i): gain from tx_ids[i] to rx_ids[j].
struct ChannelMatrix
{
    CMatrix entries;
    std::vector<NodeId> tx_ids;
    std::vector<NodeId> rx_ids;
};

// d^(-alpha/2) * exp(i*phase). Throws std::domain_error on coincident positions.
std::complex<double> channel_gain(const Vec2 &a, const Vec2 &b, double alpha, double phase);

// Phase of the (tx, rx) link under `seed`, uniform in [0, 2*pi). Stateless, so repeated
// lookups return the same value for the lifetime of the network.
double link_phase(std::uint64_t seed, NodeId tx, NodeId rx);

ChannelMatrix build_channel_matrix(const NetworkInstance &net, const std::vector<NodeId> &tx_ids,
                                   const std::vector<NodeId> &rx_ids, double alpha, std::uint64_t seed);

// Sum of |h|^2 over all entries.
double channel_power(const CMatrix &H);

// Normalised magnitudes (d_ij / d_TR)^(-alpha/2) between two level-k clusters whose centres are
// exactly two cluster widths apart along one axis. Throws std::invalid_argument otherwise.
std::vector<double> inter_cluster_distance_ratios(const NetworkInstance &net, const ClusterGrid &grid, int k,
                                                  ClusterCoord tx, ClusterCoord rx, double alpha);

void write_channel_csv(std::ostream &os, const ChannelMatrix &H);

} // namespace coopnet

#endif
