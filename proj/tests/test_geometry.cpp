// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace coopnet;

TEST_CASE("regular centre placement puts one node at every cell centre")
{
    const auto net = place_regular(81, RegularMode::Center);
    CHECK(net.size() == 81);
    CHECK(net.side_length == 9.0);
    std::set<std::pair<double, double>> seen;
    for (const auto &n : net.nodes)
    {
        CHECK(n.pos.x - std::floor(n.pos.x) == doctest::Approx(0.5));
        CHECK(n.pos.y - std::floor(n.pos.y) == doctest::Approx(0.5));
        seen.insert({n.pos.x, n.pos.y});
    }
    CHECK(seen.size() == 81);
}

TEST_CASE("regular uniform placement stays inside its cell and is seeded")
{
    const auto a = place_regular(729, RegularMode::Uniform, 7);
    const auto b = place_regular(729, RegularMode::Uniform, 7);
    const auto c = place_regular(729, RegularMode::Uniform, 8);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        const auto cx = static_cast<double>(static_cast<std::int64_t>(i) % 27);
        const auto cy = static_cast<double>(static_cast<std::int64_t>(i) / 27);
        CHECK(a.nodes[i].pos.x >= cx);
        CHECK(a.nodes[i].pos.x < cx + 1.0);
        CHECK(a.nodes[i].pos.y >= cy);
        CHECK(a.nodes[i].pos.y < cy + 1.0);
        CHECK(a.nodes[i].pos.x == b.nodes[i].pos.x);
        differs |= a.nodes[i].pos.x != c.nodes[i].pos.x;
    }
    CHECK(differs);
}

TEST_CASE("placement contract errors")
{
    CHECK_THROWS_AS(place_regular(80, RegularMode::Center), std::invalid_argument);
    CHECK_THROWS_AS(place_regular(0, RegularMode::Center), std::invalid_argument);
    CHECK_THROWS_AS(place_worst_case_pair(-1), std::invalid_argument);
    CHECK_THROWS_AS(place_random(100, 0.5, 1), std::invalid_argument);
    const auto net = place_regular(9, RegularMode::Center);
    CHECK_THROWS_AS(net.position(9), std::out_of_range);
    CHECK_THROWS_AS(net.position(-1), std::out_of_range);
}

TEST_CASE("worst-case pair: g nodes per side, border at x = 0, separation 2")
{
    for (int k = 1; k <= 3; ++k)
    {
        const auto net = place_worst_case_pair(k);
        const auto g = cluster_area(k);
        const auto tx = pair_tx_ids(net);
        const auto rx = pair_rx_ids(net);
        REQUIRE(static_cast<std::int64_t>(tx.size()) == g);
        REQUIRE(static_cast<std::int64_t>(rx.size()) == g);
        double dmin = 1e300;
        for (auto t : tx)
        {
            CHECK(net.position(t).x < 0.0);
            for (auto r : rx)
                dmin = std::min(dmin, distance(net.position(t), net.position(r)));
        }
        for (auto r : rx)
            CHECK(net.position(r).x > 0.0);
        CHECK(dmin == doctest::Approx(2.0));
    }
}

TEST_CASE("worst-case corner puts the destination at the origin")
{
    const auto net = place_worst_case_corner(2);
    CHECK(net.size() == 81);
    CHECK(net.position(0).x == 0.0);
    CHECK(net.position(0).y == 0.0);
    for (const auto &n : net.nodes)
        if (n.id != 0)
            CHECK(distance(n.pos, {0.0, 0.0}) >= std::sqrt(5.0) - 1e-12);
}

TEST_CASE("random placement: lambda N nodes inside the square")
{
    const auto net = place_random(400, 3.0, 11);
    CHECK(net.size() == 1200);
    CHECK(net.side_length == 20.0);
    for (const auto &n : net.nodes)
    {
        CHECK(n.pos.x >= 0.0);
        CHECK(n.pos.x < 20.0);
        CHECK(n.pos.y >= 0.0);
        CHECK(n.pos.y < 20.0);
    }
    CHECK(place_random(400, 3.0, 11).nodes.back().pos.x == net.nodes.back().pos.x);
}

TEST_CASE("cluster grid nests 3 x 3 children and partitions nodes")
{
    const auto net = place_regular(729, RegularMode::Center);
    const auto grid = build_cluster_grid(net, 2);
    CHECK(grid.per_side(0) == 27);
    CHECK(grid.per_side(1) == 9);
    CHECK(grid.per_side(2) == 3);
    CHECK(grid.cluster_count(2) == 9);
    for (int k = 0; k <= 2; ++k)
    {
        std::size_t total = 0;
        for (int j = 0; j < grid.per_side(k); ++j)
            for (int i = 0; i < grid.per_side(k); ++i)
            {
                const auto &m = grid.members(k, {i, j});
                CHECK(static_cast<std::int64_t>(m.size()) == cluster_area(k));
                for (auto id : m)
                    CHECK(grid.cluster_of(k, id) == ClusterCoord{i, j});
                total += m.size();
            }
        CHECK(total == 729);
    }
    const auto kids = grid.children(2, {1, 2});
    REQUIRE(kids.size() == 9);
    for (const auto &c : kids)
    {
        CHECK(c.i / 3 == 1);
        CHECK(c.j / 3 == 2);
    }
    CHECK_THROWS(grid.children(0, {0, 0}));
    CHECK_THROWS(build_cluster_grid(net, 4));
}

TEST_CASE("neighbours run clockwise from north and clip at the border")
{
    const auto net = place_regular(81, RegularMode::Center);
    const auto grid = build_cluster_grid(net, 1);
    const auto n = grid.neighbors(1, {1, 1});
    REQUIRE(n.size() == 8);
    CHECK(n[0] == ClusterCoord{1, 2});
    CHECK(n[1] == ClusterCoord{2, 2});
    CHECK(n[2] == ClusterCoord{2, 1});
    CHECK(n[4] == ClusterCoord{1, 0});
    CHECK(n[6] == ClusterCoord{0, 1});
    CHECK(grid.neighbors(1, {0, 0}).size() == 3);
    CHECK(grid.center(1, {1, 1}).x == doctest::Approx(4.5));
}

TEST_CASE("bins tile the square and hold every node once")
{
    const auto net = place_random(1000, 1.0, 3);
    const auto bins = bin_nodes(net, 30.0);
    CHECK(bins.per_side == static_cast<int>(std::floor(std::sqrt(1000.0 / 30.0))));
    CHECK(bins.bin_side * bins.per_side == doctest::Approx(net.side_length));
    std::size_t total = 0;
    for (const auto &b : bins.bins)
        total += b.size();
    CHECK(total == net.size());
    CHECK_THROWS(bin_nodes(net, 0.0));
}
