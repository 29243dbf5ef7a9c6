// SPDX-License-Identifier: Apache-2.0
#include "uavirs/rng.hpp"

#include <cmath>
#include <numbers>

namespace uavirs {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

}  // namespace

PhiloxBlock philox4x32(PhiloxBlock x, std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x[2];
        x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return x;
}

PhiloxBlock CounterRng::next_block() {
    return philox4x32(counter_of(stream_, counter_++), key_of(seed_));
}

std::array<double, 2> CounterRng::uniform_pair() {
    auto b = next_block();
    return {open_uniform(b[1], b[0]), half_open_uniform(b[3], b[2])};
}

std::array<double, 2> CounterRng::normal_pair() {
    auto [u1, u2] = uniform_pair();
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
}

}  // namespace uavirs
