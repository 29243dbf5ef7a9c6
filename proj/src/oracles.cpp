// SPDX-License-Identifier: Apache-2.0
#include "uavirs/oracles.hpp"

#include <cmath>

namespace uavirs::oracle {

long double laguerre_series(long double nu, long double x) {
    const long double y = -x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < 2000; ++k) {
        const long double kk = static_cast<long double>(k);
        term *= (1.0L + nu + kk) * y / ((kk + 1.0L) * (kk + 1.0L));
        sum += term;
        if (term < 1e-22L * sum && kk > y) break;
    }
    return std::exp(x) * sum;
}

long double bessel_i_series(int order, long double x) {
    const long double h = x / 2.0L;
    long double term = order == 0 ? 1.0L : h;
    long double sum = term;
    for (int k = 1; k < 2000; ++k) {
        const long double kk = static_cast<long double>(k);
        term *= h * h / (kk * (kk + static_cast<long double>(order)));
        sum += term;
        if (term < 1e-22L * sum) break;
    }
    return sum;
}

long double erf_series(long double x) {
    const long double ax = std::fabs(x);
    if (ax > 6.5L) return x > 0 ? 1.0L : -1.0L;
    long double term = ax;
    long double sum = ax;
    for (int n = 1; n < 4000; ++n) {
        term *= 2.0L * ax * ax / (2.0L * static_cast<long double>(n) + 1.0L);
        sum += term;
        if (term < 1e-22L * sum) break;
    }
    const long double v = 2.0L / std::sqrt(3.14159265358979323846264338327950288L) *
                          std::exp(-ax * ax) * sum;
    return x < 0 ? -v : v;
}

long double q_series(long double x) {
    return 0.5L * (1.0L - erf_series(x / std::sqrt(2.0L)));
}

}  // namespace uavirs::oracle
