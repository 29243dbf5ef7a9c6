// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace uavirs {

enum class HalfOrder { one_half, three_halves };

// Upper tail of the standard normal.
double q_function(double x);

// P(a, x) = gamma(a, x) / Gamma(a).
double regularized_lower_gamma(double a, double x);

// I_0 or I_1 for x >= 0.
double bessel_i(int order, double x);

// exp(-x) * I_order(x), safe for large x.
double bessel_i_scaled(int order, double x);

// Laguerre function L_{1/2} or L_{3/2} at x <= 0.
double laguerre_half(HalfOrder order, double x);

}  // namespace uavirs
