// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>

#include "kernels_internal.hpp"
#include "uavirs/kernels.hpp"
#include "uavirs/rng.hpp"

namespace uavirs::kernels {

namespace detail {

void philox_fill_scalar(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                        std::size_t count, std::uint32_t* out) {
    auto key = CounterRng::key_of(seed);
    for (std::size_t j = 0; j < count; ++j) {
        auto b = philox4x32(CounterRng::counter_of(stream, counter + j), key);
        std::memcpy(out + 4 * j, b.data(), sizeof(b));
    }
}

double rician_envelope_from_block(const std::uint32_t* block, double k) {
    double los = std::sqrt(k / (k + 1.0));
    double nlos = std::sqrt(1.0 / (k + 1.0));
    double u1 = open_uniform(block[1], block[0]);
    double u2 = half_open_uniform(block[3], block[2]);
    double r2 = -std::log(u1);
    double c = std::cos(2.0 * std::numbers::pi * u2);
    double e2 = los * los + 2.0 * los * nlos * std::sqrt(r2) * c + nlos * nlos * r2;
    return std::sqrt(e2 > 0.0 ? e2 : 0.0);
}

void rician_envelopes_scalar(const std::uint32_t* blocks, std::size_t count, double k,
                             double* out) {
    for (std::size_t j = 0; j < count; ++j) out[j] = rician_envelope_from_block(blocks + 4 * j, k);
}

CascadeSums cascade_sums_scalar(const double* a, const double* b, std::size_t n) {
    CascadeSums s;
    for (std::size_t i = 0; i < n; ++i) {
        s.cross += a[i] * b[i];
        s.power_a += a[i] * a[i];
        s.power_b += b[i] * b[i];
    }
    return s;
}

}  // namespace detail

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", detail::philox_fill_scalar,
                                   detail::rician_envelopes_scalar, detail::cascade_sums_scalar};
    return table;
}

const KernelTable& active_table() {
    static const KernelTable* chosen = [] {
        const char* env = std::getenv("UAVIRS_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
        if (const KernelTable* t = avx2_table()) return t;
        return &scalar_table();
    }();
    return *chosen;
}

#ifndef UAVIRS_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

}  // namespace uavirs::kernels
