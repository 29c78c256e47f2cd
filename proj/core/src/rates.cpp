// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coopnet
{

double logdet2(const CMatrix &H, double gamma)
{
    if (H.size() == 0 || gamma == 0.0)
        return 0.0;
    if (!H.allFinite() || !std::isfinite(gamma))
        throw std::domain_error("non-finite channel entries");
    // Only the lower triangle of the Gram matrix is formed; LLT reads no other entries.
    const bool wide = H.rows() <= H.cols();
    const Eigen::Index n = wide ? H.rows() : H.cols();
    CMatrix G = CMatrix::Identity(n, n);
    if (wide)
        G.selfadjointView<Eigen::Lower>().rankUpdate(H, gamma);
    else
        G.selfadjointView<Eigen::Lower>().rankUpdate(H.adjoint(), gamma);
    Eigen::LLT<CMatrix, Eigen::Lower> llt(G);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("Gram matrix factorisation failed");
    const auto &L = llt.matrixLLT();
    double s = 0.0;
    for (Eigen::Index i = 0; i < L.rows(); ++i)
        s += std::log(L(i, i).real());
    return 2.0 * s / std::numbers::ln2;
}

RateResult mimo_rate(const CMatrix &H, double P, double N0, double interference)
{
    if (!(interference >= 0.0))
        throw std::invalid_argument("interference must be >= 0");
    if (!(N0 + interference > 0.0))
        throw std::invalid_argument("noise plus interference must be > 0");
    const double gamma = P / (N0 + interference);
    const double tr = H.squaredNorm();
    if (!std::isfinite(tr))
        throw std::domain_error("non-finite channel entries");
    RateResult r;
    r.exact_logdet = logdet2(H, gamma);
    r.trace_bound = std::log2(1.0 + gamma * tr);
    r.signal_power = P * tr;
    r.noise = N0;
    r.interference = interference;
    return r;
}

RateResult quantized_hop_rate(const CMatrix &H, double P2, double N0, double interference, double Q)
{
    if (!(Q > 0.0))
        throw std::invalid_argument("Q must be > 0");
    if (!(interference >= 0.0))
        throw std::invalid_argument("interference must be >= 0");
    CMatrix S = H;
    const double q = std::exp2(-Q);
    for (Eigen::Index j = 0; j < S.rows(); ++j)
    {
        const double pr = P2 * S.row(j).squaredNorm();
        S.row(j) /= std::sqrt(N0 + interference + pr * q);
    }
    RateResult r;
    r.exact_logdet = logdet2(S, P2);
    r.trace_bound = std::log2(1.0 + P2 * S.squaredNorm());
    r.signal_power = P2 * H.squaredNorm();
    r.noise = N0;
    r.interference = interference;
    return r;
}

bool is_cluster_area(std::int64_t g)
{
    if (g < 9)
        return false;
    while (g % 9 == 0)
        g /= 9;
    return g == 1;
}

static std::int64_t checked_root(std::int64_t g, std::int64_t d)
{
    if (!is_cluster_area(g))
        throw std::invalid_argument("g = " + std::to_string(g) + " is not 9^k with k >= 1");
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(g))));
    if (d < 0 || d > s)
        throw std::out_of_range("d = " + std::to_string(d) + " outside [0, sqrt(g)]");
    return s;
}

std::int64_t phi_d(std::int64_t g, std::int64_t d)
{
    const std::int64_t s = checked_root(g, d);
    if (d == 0)
        return s - 1;
    if (d == 1)
        return 2 * s - 3;
    if (2 * d <= s - 1)
        return 2 * s - 2 * d - 2;
    if (2 * d == s + 1)
        return 2 * s - 2 * d;
    return 2 * s - 2 * d + 2;
}

std::vector<std::int64_t> phi_bruteforce_table(std::int64_t g)
{
    const std::int64_t s = checked_root(g, 0);
    std::vector<std::int64_t> table(static_cast<std::size_t>(s + 1), 0);
    for (auto yt : pair_tx_rows(s))
        for (auto yr : pair_rx_rows(s))
            ++table[static_cast<std::size_t>(std::abs(yt - yr))];
    return table;
}

std::int64_t phi_d_bruteforce(std::int64_t g, std::int64_t d)
{
    checked_root(g, d);
    return phi_bruteforce_table(g)[static_cast<std::size_t>(d)];
}

std::map<std::int64_t, std::int64_t> border_pair_counts(std::int64_t g)
{
    const std::int64_t s = checked_root(g, 0);
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t d = 0; d <= s; ++d)
        out[d] = phi_d(g, d);
    return out;
}

UdValue u_d(std::int64_t g, std::int64_t d, double alpha)
{
    if (!(alpha > 2.0))
        throw std::invalid_argument("alpha must be > 2");
    if (g < 1)
        throw std::invalid_argument("g must be positive");
    const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(g))));
    const double d2 = static_cast<double>(d) * static_cast<double>(d);
    UdValue v;
    // x = xr + xt takes value x with multiplicity min(x - 1, 2s + 1 - x).
    for (std::int64_t x = 2; x <= 2 * s; ++x)
    {
        const auto c = static_cast<double>(std::min(x - 1, 2 * s + 1 - x));
        v.exact_sum += c * std::pow(static_cast<double>(x) * static_cast<double>(x) + d2, -0.5 * alpha);
    }
    const double e = 1.0 - 0.5 * alpha;
    v.integral_lower_bound =
        (std::pow(4.0 + d2, e) - std::pow(static_cast<double>(g) + d2, e)) / (4.0 * (0.5 * alpha - 1.0));
    return v;
}

double trace_from_counts(std::int64_t g, double alpha)
{
    const std::int64_t s = checked_root(g, 0);
    double tr = 0.0;
    for (std::int64_t d = 0; d <= s; ++d)
        tr += static_cast<double>(phi_d(g, d)) * u_d(g, d, alpha).exact_sum;
    return tr;
}

double riemann_zeta(double s)
{
    if (!(s > 1.0))
        throw std::domain_error("zeta diverges for s <= 1");
    // Euler-Maclaurin with (2k)!/B_2k.
    static constexpr double A[] = {12.0,
                                   -720.0,
                                   30240.0,
                                   -1209600.0,
                                   47900160.0,
                                   -1.8924375803183791606e9,
                                   7.47242496e10,
                                   -2.950130727918164224e12,
                                   1.1646782814350067249e14,
                                   -4.5979787224074726105e15,
                                   1.8152105401943546773e17,
                                   -7.1661652561756670113e18};
    constexpr int N = 16;
    double sum = 0.0;
    for (int n = N - 1; n >= 1; --n)
        sum += std::pow(static_cast<double>(n), -s);
    const double Ns = std::pow(static_cast<double>(N), -s);
    sum += N * Ns / (s - 1.0) + 0.5 * Ns;
    double fac = s;    // s (s+1) ... (s + 2k - 2)
    double w = Ns / N; // N^(-s-2k+1)
    for (int i = 0; i < 12; ++i)
    {
        const double term = fac * w / A[i];
        sum += term;
        if (std::abs(term) < 1e-17 * sum)
            break;
        fac *= (s + 2.0 * i + 1.0) * (s + 2.0 * i + 2.0);
        w /= static_cast<double>(N) * N;
    }
    return sum;
}

double miso_constant(double alpha)
{
    if (!(alpha > 2.0))
        throw std::invalid_argument("alpha must be > 2");
    return std::pow(2.0, -0.5 * alpha) * (2.0 * riemann_zeta(alpha - 1.0) - riemann_zeta(alpha) - 1.0);
}

double miso_series(double alpha, std::int64_t terms)
{
    double s = 0.0;
    const double r2 = std::numbers::sqrt2;
    for (std::int64_t z = terms; z >= 1; --z)
        s += (2.0 * z + 1.0) * std::pow(r2 * (z + 1.0), -alpha);
    return s;
}

double miso_gain(const NetworkInstance &net, const ClusterGrid &grid, int level, NodeId dest, double alpha)
{
    const Vec2 &pd = net.position(dest);
    double s = 0.0;
    for (auto l : grid.members(level, grid.cluster_of(level, dest)))
        if (l != dest)
            s += std::norm(channel_gain(net.position(l), pd, alpha, 0.0));
    return s;
}

double miso_rate(const NetworkInstance &net, const ClusterGrid &grid, int level, NodeId dest,
                 const ChannelParams &params, double interference)
{
    params.validate();
    const double gain = miso_gain(net, grid, level, dest, params.alpha);
    return std::log2(1.0 + params.base_power / (params.noise_power + interference) * gain);
}

} // namespace coopnet
