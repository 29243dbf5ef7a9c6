// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "doctest.h"
#include "kernels_internal.hpp"
#include "uavirs/kernels.hpp"
#include "uavirs/rng.hpp"

using namespace uavirs;

TEST_CASE("philox known-answer vectors") {
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
          PhiloxBlock{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                     {0xffffffffu, 0xffffffffu}) ==
          PhiloxBlock{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                     {0xa4093822u, 0x299f31d0u}) ==
          PhiloxBlock{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("uniform conversions stay in range") {
    CHECK(open_uniform(0, 0) == 1.0);
    CHECK(open_uniform(0xffffffffu, 0xffffffffu) > 0.0);
    CHECK(half_open_uniform(0, 0) == 0.0);
    CHECK(half_open_uniform(0xffffffffu, 0xffffffffu) < 1.0);
}

TEST_CASE("counter rng is a pure function of seed, stream and counter") {
    CounterRng a(42, 7), b(42, 7);
    for (int i = 0; i < 5; ++i) CHECK(a.next_block() == b.next_block());
    CounterRng c(42, 7, 3);
    CounterRng d(42, 7);
    d.skip(3);
    CHECK(c.next_block() == d.next_block());
    CHECK(CounterRng(42, 7).next_block() != CounterRng(42, 8).next_block());
    CHECK(CounterRng(42, 7).next_block() != CounterRng(43, 7).next_block());
    CHECK(CounterRng(1ULL << 40, 0).next_block() != CounterRng(0, 0).next_block());
}

TEST_CASE("normal pair moments") {
    double s = 0, s2 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        CounterRng rng(1, static_cast<std::uint64_t>(i));
        auto z = rng.normal_pair();
        s += z[0] + z[1];
        s2 += z[0] * z[0] + z[1] * z[1];
    }
    CHECK(std::fabs(s / (2 * n)) < 0.01);
    CHECK(std::fabs(s2 / (2 * n) - 1.0) < 0.01);
}

TEST_CASE("scalar philox_fill matches the generator") {
    std::vector<std::uint32_t> out(4 * 37);
    kernels::scalar_table().philox_fill(99, 5, 11, 37, out.data());
    CounterRng rng(99, 5, 11);
    for (int j = 0; j < 37; ++j) {
        auto b = rng.next_block();
        for (int w = 0; w < 4; ++w) CHECK(out[4 * j + w] == b[w]);
    }
}

TEST_CASE("scalar envelope matches the complex construction") {
    std::vector<std::uint32_t> blocks(4 * 64);
    kernels::scalar_table().philox_fill(3, 1, 0, 64, blocks.data());
    std::vector<double> env(64);
    kernels::scalar_table().rician_envelopes(blocks.data(), 64, 10.0, env.data());
    for (int j = 0; j < 64; ++j) {
        const double u1 = open_uniform(blocks[4 * j + 1], blocks[4 * j]);
        const double u2 = half_open_uniform(blocks[4 * j + 3], blocks[4 * j + 2]);
        const double r = std::sqrt(-std::log(u1));
        const double los = std::sqrt(10.0 / 11.0), s = std::sqrt(1.0 / 11.0);
        const double re = los + s * r * std::cos(2 * M_PI * u2), im = s * r * std::sin(2 * M_PI * u2);
        CHECK(env[j] == doctest::Approx(std::hypot(re, im)).epsilon(1e-14));
    }
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
    const kernels::KernelTable* simd = kernels::avx2_table();
    if (!simd) {
        MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
        return;
    }
    const auto& ref = kernels::scalar_table();
    for (std::size_t count : {1u, 3u, 7u, 8u, 9u, 64u, 255u, 1024u}) {
        std::vector<std::uint32_t> a(4 * count), b(4 * count);
        ref.philox_fill(0x123456789abcdefULL, 77, (1ULL << 32) - 5, count, a.data());
        simd->philox_fill(0x123456789abcdefULL, 77, (1ULL << 32) - 5, count, b.data());
        CHECK(a == b);

        for (double k : {0.0, 1.0, 10.0, 1e9}) {
            std::vector<double> ea(count), eb(count);
            ref.rician_envelopes(a.data(), count, k, ea.data());
            simd->rician_envelopes(a.data(), count, k, eb.data());
            double worst = 0.0;
            for (std::size_t j = 0; j < count; ++j)
                worst = std::max(worst, std::fabs(ea[j] - eb[j]) / std::max(ea[j], 1e-300));
            CHECK(worst < 1e-13);
        }

        std::vector<double> x(count), y(count);
        ref.rician_envelopes(a.data(), count, 3.0, x.data());
        ref.rician_envelopes(a.data(), count, 0.5, y.data());
        auto sa = ref.cascade_sums(x.data(), y.data(), count);
        auto sb = simd->cascade_sums(x.data(), y.data(), count);
        CHECK(sb.cross == doctest::Approx(sa.cross).epsilon(1e-13));
        CHECK(sb.power_a == doctest::Approx(sa.power_a).epsilon(1e-13));
        CHECK(sb.power_b == doctest::Approx(sa.power_b).epsilon(1e-13));
    }
}

TEST_CASE("SIMD envelope at extreme uniforms") {
    const kernels::KernelTable* simd = kernels::avx2_table();
    if (!simd) return;
    std::vector<std::uint32_t> blocks = {0, 0, 0, 0,
                                         0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu,
                                         0, 0, 0x80000000u, 0,
                                         0xffffffffu, 0, 0x40000000u, 0};
    std::vector<double> ea(4), eb(4);
    kernels::scalar_table().rician_envelopes(blocks.data(), 4, 2.0, ea.data());
    simd->rician_envelopes(blocks.data(), 4, 2.0, eb.data());
    for (int j = 0; j < 4; ++j) CHECK(eb[j] == doctest::Approx(ea[j]).epsilon(1e-13));
}
