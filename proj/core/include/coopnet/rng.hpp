// SPDX-License-Identifier: Apache-2.0
//
// coopnet: hierarchical cooperative relaying for extended wireless networks
// Copyright (C) 2026 The coopnet contributors
// ------------------------------------------------------------------------

#ifndef COOPNET_RNG_HPP
#define COOPNET_RNG_HPP

#include <cstdint>
#include <limits>

namespace coopnet
{

// SplitMix64 step; also used to derive independent per-task seeds.
constexpr std::uint64_t splitmix64(std::uint64_t &state) noexcept
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based split: seed of sub-stream `counter` under `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) noexcept
{
    std::uint64_t s = master ^ (0xD1B54A32D192ED03ULL * (counter + 1));
    splitmix64(s);
    return splitmix64(s);
}

// Small deterministic generator. Output is identical on every platform,
// unlike std:: distributions, so CSV outputs stay byte-stable.
class Rng
{
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return splitmix64(state_); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n) noexcept
    {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;)
        {
            const std::uint64_t r = (*this)();
            if (r >= threshold)
                return r % n;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace coopnet

#endif
