// SPDX-License-Identifier: Apache-2.0
#include "uavirs/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "uavirs/error.hpp"

namespace uavirs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 1000000;
constexpr double kSeriesLimit = 30.0;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

// log of x^a e^-x / Gamma(a)
double gamma_prefactor_log(double a, double x) {
    return a * std::log(x) - x - std::lgamma(a);
}

double lower_gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < kMaxIter; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(gamma_prefactor_log(a, x));
}

// Lentz continued fraction for the upper regularized gamma.
double upper_gamma_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(gamma_prefactor_log(a, x));
}

double bessel_series(int order, double x) {
    double half = 0.5 * x;
    double q = half * half;
    double term = order == 0 ? 1.0 : half;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * (k + order));
        sum += term;
        if (term < sum * kEps) break;
    }
    return sum;
}

// Hankel expansion of exp(-x) I_order(x).
double bessel_scaled_asymptotic(int order, double x) {
    double mu = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        double odd = 2.0 * k - 1.0;
        double next = -term * (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

void check_bessel_args(int order, double x) {
    require_finite(x, "bessel_i");
    if (order != 0 && order != 1) throw DomainError("bessel_i: order must be 0 or 1");
    if (x < 0.0) throw DomainError("bessel_i: negative argument");
}

}  // namespace

double q_function(double x) {
    require_finite(x, "q_function");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double regularized_lower_gamma(double a, double x) {
    require_finite(a, "regularized_lower_gamma");
    if (std::isnan(x)) throw DomainError("regularized_lower_gamma: NaN argument");
    if (a <= 0.0) throw DomainError("regularized_lower_gamma: a must be positive");
    if (x < 0.0) throw DomainError("regularized_lower_gamma: x must be non-negative");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    double p = x < a + 1.0 ? lower_gamma_series(a, x) : 1.0 - upper_gamma_fraction(a, x);
    return std::clamp(p, 0.0, 1.0);
}

double bessel_i_scaled(int order, double x) {
    check_bessel_args(order, x);
    if (x <= kSeriesLimit) return std::exp(-x) * bessel_series(order, x);
    return bessel_scaled_asymptotic(order, x);
}

double bessel_i(int order, double x) {
    check_bessel_args(order, x);
    if (x <= kSeriesLimit) return bessel_series(order, x);
    return std::exp(x) * bessel_scaled_asymptotic(order, x);
}

double laguerre_half(HalfOrder order, double x) {
    require_finite(x, "laguerre_half");
    if (x > 0.0) throw DomainError("laguerre_half: argument must be <= 0");
    // exp(x/2) I_k(-x/2) is the scaled Bessel function at -x/2.
    double z = -0.5 * x;
    double i0 = bessel_i_scaled(0, z);
    double i1 = bessel_i_scaled(1, z);
    if (order == HalfOrder::one_half) return (1.0 - x) * i0 - x * i1;
    return ((3.0 - 6.0 * x + 2.0 * x * x) * i0 - 2.0 * x * (2.0 - x) * i1) / 3.0;
}

}  // namespace uavirs
