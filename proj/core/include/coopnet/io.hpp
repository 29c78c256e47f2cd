// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_IO_HPP
#define COOPNET_IO_HPP

#include "coopnet/geometry.hpp"

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace coopnet
{

inline constexpr int kSchemaVersion = 1;

// Shortest round-trip decimal form; identical bytes for identical values.
std::string format_double(double v);

// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

// Every row starts with schema_version, config_hash, seed. Rows are flushed as written so an
// interrupted run leaves a valid prefix.
class CsvWriter
{
public:
    CsvWriter(std::ostream &os, std::vector<std::string> columns, std::string config_hash, std::uint64_t seed);

    void row(const std::vector<std::string> &fields);
    std::size_t columns() const { return ncol_; }

private:
    std::ostream &os_;
    std::size_t ncol_;
    std::string prefix_;
};

void write_network_csv(std::ostream &os, const NetworkInstance &net, const std::string &config_hash);

// Sidecar: topology, seed, N, lambda, K, schema_version, config_hash.
void write_network_sidecar(std::ostream &os, const NetworkInstance &net, int K, const std::string &config_hash);

} // namespace coopnet

#endif
