// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_RATES_HPP
#define COOPNET_RATES_HPP

#include "coopnet/channel.hpp"
#include "coopnet/geometry.hpp"

#include <cstdint>
#include <map>

namespace coopnet
{

// Rates in bits per channel use.
struct RateResult
{
    double exact_logdet = 0.0; // log2 det(I + gamma H H*)
    double trace_bound = 0.0;  // log2(1 + gamma Tr(H H*))
    double signal_power = 0.0; // P * Tr(H H*)
    double noise = 0.0;
    double interference = 0.0;
};

// gamma = P / (N0 + interference). Throws std::domain_error on non-finite input.
RateResult mimo_rate(const CMatrix &H, double P, double N0, double interference);

// log2 det(I + gamma H H*) through a Cholesky factor of the smaller Gram matrix.
double logdet2(const CMatrix &H, double gamma);

// Quantisation at Q bits per observation as extra noise P_r,j / 2^Q at receiver j, where
// P_r,j = P2 sum_i |h_ji|^2.
RateResult quantized_hop_rate(const CMatrix &H, double P2, double N0, double interference, double Q);

// True for g = 9^k, k >= 1.
bool is_cluster_area(std::int64_t g);

// Border pairs of the worst-case topology at vertical offset d. Throws std::out_of_range for
// d outside [0, sqrt(g)] and std::invalid_argument for g not in {9, 81, ...}.
std::int64_t phi_d(std::int64_t g, std::int64_t d);
std::int64_t phi_d_bruteforce(std::int64_t g, std::int64_t d);
// Brute-force counts for every d = 0..sqrt(g) in one pass over the row pairs.
std::vector<std::int64_t> phi_bruteforce_table(std::int64_t g);
std::map<std::int64_t, std::int64_t> border_pair_counts(std::int64_t g);

struct UdValue
{
    double exact_sum = 0.0;
    double integral_lower_bound = 0.0;
};

// sum_{xt,xr=1..sqrt(g)} ((xr + xt)^2 + d^2)^(-alpha/2) and its integral lower bound.
UdValue u_d(std::int64_t g, std::int64_t d, double alpha);

// sum_d Phi_d u(d): Tr(H H*) of the worst-case pair.
double trace_from_counts(std::int64_t g, double alpha);

// s > 1, absolute error below 1e-12 for s >= 1.01. Throws std::domain_error for s <= 1.
double riemann_zeta(double s);

// 2^(-alpha/2) (2 zeta(alpha-1) - zeta(alpha) - 1) for alpha > 2.
double miso_constant(double alpha);

// sum_{z=1}^{terms} (2z+1) / (sqrt(2)(z+1))^alpha.
double miso_series(double alpha, std::int64_t terms);

// Sum of |h_lD|^2 from every other member of dest's level-k cluster.
double miso_gain(const NetworkInstance &net, const ClusterGrid &grid, int level, NodeId dest, double alpha);

double miso_rate(const NetworkInstance &net, const ClusterGrid &grid, int level, NodeId dest,
                 const ChannelParams &params, double interference = 0.0);

} // namespace coopnet

#endif
