// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

#include "uavirs/kernels.hpp"

namespace uavirs::kernels::detail {

void philox_fill_scalar(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                        std::size_t count, std::uint32_t* out);
double rician_envelope_from_block(const std::uint32_t* block, double k);
void rician_envelopes_scalar(const std::uint32_t* blocks, std::size_t count, double k, double* out);
CascadeSums cascade_sums_scalar(const double* a, const double* b, std::size_t n);

}  // namespace uavirs::kernels::detail
