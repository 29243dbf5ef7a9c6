// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace uavirs {

using PhiloxBlock = std::array<std::uint32_t, 4>;

// Philox4x32 with 10 rounds.
PhiloxBlock philox4x32(PhiloxBlock counter, std::array<std::uint32_t, 2> key);

// (0, 1] from 52 random bits; never zero so log() is safe.
inline double open_uniform(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    double d = std::bit_cast<double>((bits >> 12) | 0x3FF0000000000000ULL);
    return 2.0 - d;
}

// [0, 1) from 52 random bits.
inline double half_open_uniform(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    double d = std::bit_cast<double>((bits >> 12) | 0x3FF0000000000000ULL);
    return d - 1.0;
}

// Each draw is a pure function of (seed, stream, counter).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter = 0)
        : seed_(seed), stream_(stream), counter_(counter) {}

    PhiloxBlock next_block();

    // u1 in (0,1], u2 in [0,1), from one block.
    std::array<double, 2> uniform_pair();

    // Two independent standard normals (Box-Muller) from one block.
    std::array<double, 2> normal_pair();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t counter() const { return counter_; }
    void skip(std::uint64_t blocks) { counter_ += blocks; }

    static std::array<std::uint32_t, 2> key_of(std::uint64_t seed) {
        return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    }
    static PhiloxBlock counter_of(std::uint64_t stream, std::uint64_t counter) {
        return {static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
                static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
};

}  // namespace uavirs
