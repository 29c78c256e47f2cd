// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/scheduling.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

using namespace coopnet;

TEST_CASE("TDMA slots partition the cluster field")
{
    for (Reuse r : {Reuse::Nine, Reuse::TwentyFive})
    {
        const TdmaSchedule s(r, 1, 15);
        std::set<std::pair<int, int>> seen;
        for (int slot = 0; slot < s.slots(); ++slot)
            for (const auto &c : s.active_set(slot))
            {
                CHECK(s.slot_of(c) == slot);
                CHECK(seen.insert({c.i, c.j}).second);
            }
        CHECK(seen.size() == 225);
        CHECK_THROWS_AS(s.active_set(s.slots()), std::out_of_range);
    }
    CHECK_THROWS(TdmaSchedule(Reuse::Nine, 1, 0));
}

TEST_CASE("co-slot clusters respect the tier separation")
{
    // Boundary gap of tier a is at least (3a-2) widths for 9-TDMA and (4a-2) for 25-TDMA
    // (the latter is the loose separation used by the routing bound).
    for (Reuse r : {Reuse::Nine, Reuse::TwentyFive})
    {
        const TdmaSchedule s(r, 1, 15);
        const double sep = r == Reuse::Nine ? 3.0 : 4.0;
        for (int slot = 0; slot < s.slots(); ++slot)
        {
            const auto act = s.active_set(slot);
            for (const auto &a : act)
                for (const auto &b : act)
                {
                    if (a == b)
                        continue;
                    const int t = lattice_tier(a, b, r);
                    CHECK(t >= 1);
                    CHECK(boundary_distance(1.0, a, b) >= sep * t - 2.0 - 1e-12);
                }
        }
    }
}

TEST_CASE("tier interferer count is 8a")
{
    CHECK(tier_interferer_count(0) == 0);
    CHECK(tier_interferer_count(1) == 8);
    CHECK(tier_interferer_count(5) == 40);
    CHECK_THROWS_AS(tier_interferer_count(-1), std::invalid_argument);
}

TEST_CASE("tail constants bound the tier sums")
{
    for (double alpha : {2.5, 3.0, 4.0, 6.0})
    {
        double s3 = 0.0, s4 = 0.0;
        for (int a = 1; a <= 200000; ++a)
        {
            s3 += a * std::pow(3.0 * a - 2.0, -alpha);
            s4 += a * std::pow(4.0 * a - 2.0, -alpha);
        }
        CHECK(s3 <= intra_constant_c2(alpha));
        CHECK(s4 <= inter_constant_c4(alpha));
    }
    CHECK(inter_constant_c4(4.0) == doctest::Approx(1.0 + 1.0 / 32.0));
    CHECK(intra_constant_c2(4.0) == doctest::Approx(1.0 + 1.0 / 18.0));
    CHECK_THROWS(intra_constant_c2(2.0));
    CHECK_THROWS(inter_constant_c4(1.5));
}

TEST_CASE("intra bound: finite sum below limit, limit falls as g grows")
{
    const ChannelParams p;
    double prev = 1e300;
    for (int k = 1; k <= 8; ++k)
    {
        const auto b = intra_interference_bound(k, 1e20, p);
        CHECK(b.finite_sum <= b.limit);
        CHECK(b.limit < prev);
        CHECK(b.limit == doctest::Approx(8.0 * intra_constant_c2(4.0) / static_cast<double>(cluster_area(k))));
        prev = b.limit;
    }
    // A huge tier count falls back to the integral tail; it must agree with the explicit sum.
    const auto small = intra_interference_bound(1, 9.0 * 9.0 * 65536.0 * 65536.0, p);
    const auto big = intra_interference_bound(1, 9.0 * 9.0 * 65537.0 * 65537.0, p);
    CHECK(big.finite_sum == doctest::Approx(small.finite_sum).epsilon(1e-12));
}

TEST_CASE("inter bound limit does not depend on g")
{
    const ChannelParams p;
    for (int K = 1; K <= 5; ++K)
    {
        const auto b = inter_interference_bound(K, 1e18, p);
        CHECK(b.limit == doctest::Approx(8.0 * inter_constant_c4(4.0) * 16.0));
        CHECK(b.finite_sum <= b.limit);
        CHECK(hop_power(K, p) == doctest::Approx(16.0 * static_cast<double>(cluster_area(K))));
    }
}

TEST_CASE("exact interference never exceeds the bound on regular instances")
{
    for (auto mode : {RegularMode::Center, RegularMode::Uniform})
    {
        const auto net = place_regular(729, mode, 4);
        const auto grid = build_cluster_grid(net, 2);
        for (int k = 1; k <= 2; ++k)
        {
            const auto s = make_schedule(grid, k, Reuse::Nine);
            const ClusterCoord rx{0, 0};
            const auto rep = exact_interference(net, grid, s, s.slot_of(rx), rx, 1.0, 4.0);
            CHECK(rep.per_node_power.size() == static_cast<std::size_t>(cluster_area(k)));
            CHECK(rep.max_power <= rep.bound);
            CHECK(max_exact_interference(net, grid, s, 1.0, 4.0) <= rep.bound);
        }
    }
}

TEST_CASE("exact interference against a direct power sum")
{
    const auto net = place_regular(81, RegularMode::Center);
    const auto grid = build_cluster_grid(net, 1);
    const auto s = make_schedule(grid, 1, Reuse::Nine);
    // 3 x 3 level-1 clusters, all in different slots: nobody interferes.
    CHECK(max_exact_interference(net, grid, s, 1.0, 4.0) == 0.0);

    const auto big = place_regular(729, RegularMode::Center);
    const auto g2 = build_cluster_grid(big, 1);
    const auto s2 = make_schedule(g2, 1, Reuse::Nine);
    const ClusterCoord rx{3, 3};
    const auto rep = exact_interference(big, g2, s2, s2.slot_of(rx), rx, 2.0, 4.0);
    const NodeId probe = g2.members(1, rx).front();
    double ref = 0.0;
    for (const auto &c : s2.active_set(s2.slot_of(rx)))
        if (!(c == rx))
            for (auto id : g2.members(1, c))
                ref += 2.0 * std::pow(distance(big.position(id), big.position(probe)), -4.0);
    CHECK(rep.per_node_power.at(probe) == doctest::Approx(ref).epsilon(1e-12));
    CHECK_THROWS_AS(exact_interference(big, g2, s2, (s2.slot_of(rx) + 1) % 9, rx, 1.0, 4.0), std::invalid_argument);
}

TEST_CASE("schedule CSV has the provenance prefix")
{
    std::ostringstream os;
    write_schedule_csv(os, TdmaSchedule(Reuse::Nine, 1, 3), "abc", 5);
    const auto text = os.str();
    CHECK(text.rfind("schema_version,config_hash,seed,level,i,j,slot\n", 0) == 0);
    CHECK(text.find("1,abc,5,1,2,2,8\n") != std::string::npos);
}
