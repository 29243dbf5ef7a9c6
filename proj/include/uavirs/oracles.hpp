// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace uavirs::oracle {

// Reference evaluations by plain series in long double. They share no code
// with the production special functions.

// 1F1(-nu; 1; x) through the Kummer transform e^x 1F1(1+nu; 1; -x), x <= 0.
long double laguerre_series(long double nu, long double x);

// Modified Bessel I_order by its power series.
long double bessel_i_series(int order, long double x);

// erf by the all-positive series exp(-x^2) sum 2^n x^(2n+1) / (2n+1)!!.
long double erf_series(long double x);

// Standard normal upper tail built on erf_series.
long double q_series(long double x);

}  // namespace uavirs::oracle
