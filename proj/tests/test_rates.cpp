// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/rates.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace coopnet;

namespace
{
// Border-pair count read directly off the placed coordinates: transmit nodes on x = -1,
// receive nodes on x = +1.
std::int64_t phi_from_positions(int k, std::int64_t d)
{
    const auto net = place_worst_case_pair(k);
    std::int64_t count = 0;
    for (auto t : pair_tx_ids(net))
        for (auto r : pair_rx_ids(net))
        {
            const auto &pt = net.position(t);
            const auto &pr = net.position(r);
            if (pt.x == -1.0 && pr.x == 1.0)
                count += std::llround(std::abs(pt.y - pr.y)) == d;
        }
    return count;
}

double u_double_loop(std::int64_t s, std::int64_t d, double alpha)
{
    double sum = 0.0;
    for (std::int64_t xt = 1; xt <= s; ++xt)
        for (std::int64_t xr = 1; xr <= s; ++xr)
        {
            const double x = static_cast<double>(xt + xr);
            sum += std::pow(x * x + static_cast<double>(d * d), -0.5 * alpha);
        }
    return sum;
}
} // namespace

TEST_CASE("phi: frozen table for g = 9")
{
    CHECK(phi_d(9, 0) == 2);
    CHECK(phi_d(9, 1) == 3);
    CHECK(phi_d(9, 2) == 2);
    CHECK(phi_d(9, 3) == 2);
}

TEST_CASE("phi: frozen table for g = 81")
{
    const std::int64_t expect[] = {8, 15, 12, 10, 8, 8, 8, 6, 4, 2};
    std::int64_t sum = 0;
    for (std::int64_t d = 0; d <= 9; ++d)
    {
        CHECK(phi_d(81, d) == expect[d]);
        CHECK(phi_from_positions(2, d) == expect[d]);
        sum += phi_d(81, d);
    }
    CHECK(sum == 81);
}

TEST_CASE("phi: closed form equals positional and brute-force counts")
{
    for (int k = 1; k <= 6; ++k)
    {
        const auto g = cluster_area(k);
        const auto s = pow3(k);
        std::int64_t sum = 0;
        for (std::int64_t d = 0; d <= s; ++d)
        {
            REQUIRE(phi_d(g, d) == phi_d_bruteforce(g, d));
            if (k <= 3)
                REQUIRE(phi_d(g, d) == phi_from_positions(k, d));
            sum += phi_d(g, d);
        }
        CHECK(sum == g);
        CHECK(border_pair_counts(g).size() == static_cast<std::size_t>(s + 1));
    }
    CHECK_THROWS_AS(phi_d(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(phi_d(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(phi_d(9, 4), std::out_of_range);
    CHECK(is_cluster_area(6561));
    CHECK_FALSE(is_cluster_area(27));
}

TEST_CASE("u(d) equals the double loop and exceeds its integral bound")
{
    for (double alpha : {2.5, 4.0, 6.0})
        for (int k = 1; k <= 3; ++k)
        {
            const auto g = cluster_area(k);
            const auto s = pow3(k);
            for (std::int64_t d = 0; d <= s; ++d)
            {
                const auto u = u_d(g, d, alpha);
                CHECK(u.exact_sum == doctest::Approx(u_double_loop(s, d, alpha)).epsilon(1e-12));
                CHECK(u.integral_lower_bound <= u.exact_sum);
            }
        }
}

TEST_CASE("trace from counts equals the worst-case matrix power")
{
    for (double alpha : {3.0, 4.0})
        for (int k = 1; k <= 3; ++k)
        {
            const auto net = place_worst_case_pair(k);
            const auto H = build_channel_matrix(net, pair_tx_ids(net), pair_rx_ids(net), alpha, 1);
            CHECK(trace_from_counts(cluster_area(k), alpha) ==
                  doctest::Approx(channel_power(H.entries)).epsilon(1e-10));
        }
}

TEST_CASE("log-determinant: diagonal and rank-one oracles")
{
    CMatrix D = CMatrix::Zero(3, 3);
    D(0, 0) = 1.0;
    D(1, 1) = {0.0, 2.0};
    D(2, 2) = 0.5;
    const double gamma = 3.0;
    CHECK(logdet2(D, gamma) ==
          doctest::Approx(std::log2(1 + 3.0) + std::log2(1 + 12.0) + std::log2(1 + 0.75)).epsilon(1e-12));
    CMatrix v(4, 1);
    v << 1.0, std::complex<double>(0, 1), 2.0, -1.0;
    CHECK(logdet2(v, 0.5) == doctest::Approx(std::log2(1.0 + 0.5 * 7.0)));
    CHECK(logdet2(v.adjoint(), 0.5) == doctest::Approx(std::log2(1.0 + 0.5 * 7.0)));
    CHECK(logdet2(CMatrix(), 1.0) == 0.0);
    CMatrix bad = D;
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(logdet2(bad, 1.0), std::domain_error);
}

TEST_CASE("trace bound never exceeds the log-determinant")
{
    for (double alpha : {2.5, 3.0, 4.0, 6.0})
        for (int k = 0; k <= 2; ++k)
            for (std::uint64_t s = 0; s < 10; ++s)
            {
                const auto net = place_worst_case_pair(k);
                const auto H = build_channel_matrix(net, pair_tx_ids(net), pair_rx_ids(net), alpha, s);
                const auto r = mimo_rate(H.entries, 1.0, 1e-4, 0.1);
                CHECK(r.trace_bound <= r.exact_logdet * (1 + 1e-12));
                CHECK(r.interference == 0.1);
            }
    CHECK_THROWS(mimo_rate(CMatrix::Identity(2, 2), 1.0, 1e-4, -1.0));
    CHECK_THROWS(mimo_rate(CMatrix::Identity(2, 2), 1.0, 0.0, 0.0));
}

TEST_CASE("quantised hop rate approaches the unquantised rate as Q grows")
{
    const auto net = place_worst_case_pair(1);
    const auto H = build_channel_matrix(net, pair_tx_ids(net), pair_rx_ids(net), 4.0, 3);
    const double plain = mimo_rate(H.entries, 16.0, 1e-2, 0.0).exact_logdet;
    double prev = 0.0;
    for (double Q : {1.0, 2.0, 4.0, 8.0, 40.0})
    {
        const double q = quantized_hop_rate(H.entries, 16.0, 1e-2, 0.0, Q).exact_logdet;
        CHECK(q > prev);
        CHECK(q <= plain * (1 + 1e-12));
        prev = q;
    }
    CHECK(prev == doctest::Approx(plain).epsilon(1e-6));
    CHECK_THROWS(quantized_hop_rate(H.entries, 16.0, 1e-2, 0.0, 0.0));
}

TEST_CASE("zeta matches closed forms and the standard library")
{
    const double pi = std::numbers::pi;
    CHECK(riemann_zeta(2.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-14));
    CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-14));
    CHECK(riemann_zeta(6.0) == doctest::Approx(std::pow(pi, 6) / 945.0).epsilon(1e-14));
    for (double s : {1.1, 1.5, 2.5, 3.0, 5.0, 12.0})
        CHECK(riemann_zeta(s) == doctest::Approx(std::riemann_zeta(s)).epsilon(1e-12));
    CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
}

TEST_CASE("MISO constant: closed form, series and frozen value")
{
    CHECK(miso_constant(4.0) == doctest::Approx(0.0804476).epsilon(1e-6));
    const double apery = std::riemann_zeta(3.0);
    const double z4 = std::pow(std::numbers::pi, 4) / 90.0;
    CHECK(miso_constant(4.0) == doctest::Approx(0.25 * (2.0 * apery - z4 - 1.0)).epsilon(1e-13));
    for (double alpha : {3.0, 4.0, 6.0})
        CHECK(miso_series(alpha, 2000000) == doctest::Approx(miso_constant(alpha)).epsilon(1e-6));
    CHECK(miso_series(4.0, 10) < miso_constant(4.0));
}

TEST_CASE("corner destination collects more than the MISO constant")
{
    for (int k = 1; k <= 3; ++k)
    {
        const auto net = place_worst_case_corner(k);
        const auto grid = build_cluster_grid(net, k, 1.0);
        CHECK(miso_gain(net, grid, k, 0, 4.0) > miso_constant(4.0));
        CHECK(miso_rate(net, grid, k, 0, ChannelParams{}) > 0.0);
    }
}
