// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/protocol.hpp"
#include "coopnet/rates.hpp"
#include "coopnet/scheduling.hpp"

#include <benchmark/benchmark.h>

using namespace coopnet;

static void BM_LogDetWorstCasePair(benchmark::State &state)
{
    const auto net = place_worst_case_pair(static_cast<int>(state.range(0)));
    const auto H = build_channel_matrix(net, pair_tx_ids(net), pair_rx_ids(net), 4.0, 1).entries;
    for (auto _ : state)
        benchmark::DoNotOptimize(logdet2(H, 1e4));
}
BENCHMARK(BM_LogDetWorstCasePair)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_BuildChannelMatrix(benchmark::State &state)
{
    const auto net = place_worst_case_pair(static_cast<int>(state.range(0)));
    const auto tx = pair_tx_ids(net), rx = pair_rx_ids(net);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_channel_matrix(net, tx, rx, 4.0, ++seed));
}
BENCHMARK(BM_BuildChannelMatrix)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_TraceFromCounts(benchmark::State &state)
{
    const auto g = cluster_area(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_from_counts(g, 4.0));
}
BENCHMARK(BM_TraceFromCounts)->DenseRange(2, 6, 2);

static void BM_MaxExactInterference(benchmark::State &state)
{
    const auto net = place_regular(state.range(0), RegularMode::Center);
    const auto grid = build_cluster_grid(net, 1);
    const auto sched = make_schedule(grid, 1, Reuse::Nine);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_exact_interference(net, grid, sched, 1.0, 4.0));
}
BENCHMARK(BM_MaxExactInterference)->Arg(729)->Arg(6561)->Unit(benchmark::kMillisecond);

static void BM_OptimizeClusterLevel(benchmark::State &state)
{
    const SchemeConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_cluster_level(std::int64_t{531441}, cfg));
}
BENCHMARK(BM_OptimizeClusterLevel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
