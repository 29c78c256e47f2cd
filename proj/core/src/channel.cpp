// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/channel.hpp"
#include "coopnet/rng.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace coopnet
{

void ChannelParams::validate() const
{
    if (!(alpha > 2.0))
        throw std::invalid_argument("alpha must be > 2");
    if (!(noise_power > 0.0))
        throw std::invalid_argument("noise_power must be > 0");
    if (!(base_power > 0.0))
        throw std::invalid_argument("base_power must be > 0");
}

std::complex<double> channel_gain(const Vec2 &a, const Vec2 &b, double alpha, double phase)
{
    const double d = distance(a, b);
    if (!(d > 0.0))
        throw std::domain_error("channel gain undefined at zero distance");
    return std::polar(std::pow(d, -0.5 * alpha), phase);
}

double link_phase(std::uint64_t seed, NodeId tx, NodeId rx)
{
    Rng rng(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(tx)), static_cast<std::uint64_t>(rx)));
    return 2.0 * std::numbers::pi * rng.uniform();
}

ChannelMatrix build_channel_matrix(const NetworkInstance &net, const std::vector<NodeId> &tx_ids,
                                   const std::vector<NodeId> &rx_ids, double alpha, std::uint64_t seed)
{
    {
        std::set<NodeId> tx(tx_ids.begin(), tx_ids.end());
        for (auto r : rx_ids)
            if (tx.count(r))
                throw std::invalid_argument("tx and rx sets must be disjoint");
    }
    ChannelMatrix H;
    H.tx_ids = tx_ids;
    H.rx_ids = rx_ids;
    H.entries.resize(static_cast<Eigen::Index>(rx_ids.size()), static_cast<Eigen::Index>(tx_ids.size()));
    for (std::size_t i = 0; i < tx_ids.size(); ++i)
    {
        const Vec2 &pt = net.position(tx_ids[i]);
        for (std::size_t j = 0; j < rx_ids.size(); ++j)
            H.entries(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
                channel_gain(pt, net.position(rx_ids[j]), alpha, link_phase(seed, tx_ids[i], rx_ids[j]));
    }
    return H;
}

double channel_power(const CMatrix &H)
{
    return H.squaredNorm();
}

std::vector<double> inter_cluster_distance_ratios(const NetworkInstance &net, const ClusterGrid &grid, int k,
                                                  ClusterCoord tx, ClusterCoord rx, double alpha)
{
    const int di = std::abs(tx.i - rx.i), dj = std::abs(tx.j - rx.j);
    if (!((di == 2 && dj == 0) || (di == 0 && dj == 2)))
        throw std::invalid_argument("clusters must be two widths apart along one axis");
    const double d_tr = 2.0 * grid.cluster_side(k);
    std::vector<double> rho;
    const auto &T = grid.members(k, tx);
    const auto &R = grid.members(k, rx);
    rho.reserve(T.size() * R.size());
    for (auto i : T)
        for (auto j : R)
            rho.push_back(std::pow(distance(net.position(i), net.position(j)) / d_tr, -0.5 * alpha));
    return rho;
}

void write_channel_csv(std::ostream &os, const ChannelMatrix &H)
{
    os << "rx_id,tx_id,re,im\n";
    os.precision(17);
    for (Eigen::Index j = 0; j < H.entries.rows(); ++j)
        for (Eigen::Index i = 0; i < H.entries.cols(); ++i)
            os << H.rx_ids[static_cast<std::size_t>(j)] << ',' << H.tx_ids[static_cast<std::size_t>(i)] << ','
               << H.entries(j, i).real() << ',' << H.entries(j, i).imag() << '\n';
}

} // namespace coopnet
