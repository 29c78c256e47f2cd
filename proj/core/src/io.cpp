// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#include "coopnet/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace coopnet
{

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc())
        throw std::runtime_error("double formatting failed");
    return std::string(buf.data(), end);
}

std::string fnv1a_hex(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CsvWriter::CsvWriter(std::ostream &os, std::vector<std::string> columns, std::string config_hash, std::uint64_t seed)
    : os_(os), ncol_(columns.size())
{
    prefix_ = std::to_string(kSchemaVersion) + ',' + config_hash + ',' + std::to_string(seed);
    os_ << "schema_version,config_hash,seed";
    for (const auto &c : columns)
        os_ << ',' << c;
    os_ << '\n';
    os_.flush();
}

void CsvWriter::row(const std::vector<std::string> &fields)
{
    if (fields.size() != ncol_)
        throw std::invalid_argument("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                                    std::to_string(ncol_));
    os_ << prefix_;
    for (const auto &f : fields)
        os_ << ',' << f;
    os_ << '\n';
    os_.flush();
}

void write_network_csv(std::ostream &os, const NetworkInstance &net, const std::string &config_hash)
{
    CsvWriter csv(os, {"node_id", "x", "y"}, config_hash, net.seed);
    for (const auto &n : net.nodes)
        csv.row({std::to_string(n.id), format_double(n.pos.x), format_double(n.pos.y)});
}

void write_network_sidecar(std::ostream &os, const NetworkInstance &net, int K, const std::string &config_hash)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["config_hash"] = config_hash;
    j["topology"] = to_string(net.topology);
    j["seed"] = net.seed;
    j["N"] = std::llround(net.side_length * net.side_length);
    j["side_length"] = net.side_length;
    j["lambda"] = net.density;
    j["K"] = K;
    j["nodes"] = net.size();
    os << j.dump(2) << '\n';
}

} // namespace coopnet
