// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

namespace uavirs::kernels {

struct CascadeSums {
    double cross = 0.0;     // sum a_n b_n
    double power_a = 0.0;   // sum a_n^2
    double power_b = 0.0;   // sum b_n^2
};

// Hot loops of the Monte Carlo oracle. Every table computes the same
// quantities; the scalar one is the reference.
struct KernelTable {
    const char* name;
    // count Philox blocks for (seed, stream, counter .. counter+count-1), 4 words each.
    void (*philox_fill)(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                        std::size_t count, std::uint32_t* out);
    // One unit-power Rician envelope per block.
    void (*rician_envelopes)(const std::uint32_t* blocks, std::size_t count, double k, double* out);
    CascadeSums (*cascade_sums)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_table();

// Null unless compiled in and supported by the running CPU.
const KernelTable* avx2_table();

// AVX2 when available; UAVIRS_SIMD=scalar in the environment forces the reference.
const KernelTable& active_table();

}  // namespace uavirs::kernels
