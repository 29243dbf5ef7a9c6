// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "uavirs/geometry.hpp"

namespace uavirs {

// Linear units throughout.
struct ChannelParams {
    double k0 = 10.0;
    double k1 = 10.0;
    double alpha0 = 2.0;
    double alpha1 = 2.2;
    double c0 = 1e-3;
    double d0 = 1.0;
    double d1 = 1.0;

    double beta0() const;
    double beta1() const;
    void validate() const;
};

enum class IrsVariant { passive, active };

struct ActiveParams {
    double sigma2_f = 0.0;  // amplification noise, W
    double p_f = 0.0;       // amplification budget, W
};

struct LinkConfig {
    double p_t = 1.0;
    int m_antennas = 16;
    int n_elements = 64;
    double sigma2_n = 1e-11;
    double zeta = 0.0;
    double sigma2_e = 0.0;
    double gamma_th = 10.0;
    IrsVariant variant = IrsVariant::passive;
    std::optional<ActiveParams> active;

    double gamma0() const { return p_t / sigma2_n; }
    // 1 + P_t zeta sigma_e^2 / sigma_n^2
    double b1() const { return p_t * zeta * sigma2_e / sigma2_n + 1.0; }
    void validate() const;
};

struct CascadeMoments {
    double mu_v = 0.0;
    double var_v = 0.0;
    double shape = 0.0;  // mu^2 / var
    double scale = 0.0;  // var / mu

    bool degenerate() const { return mu_v == 0.0; }
};

struct PowerSumStats {
    double mu_z0 = 0.0;  // beta1 * sum |h|^2
    double var_z0 = 0.0;
    double mu_z1 = 0.0;  // beta0 * sum |H|^2
    double var_z1 = 0.0;
};

struct ActiveCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

struct CorrelationTerms {
    double rho = 0.0;
    double mu_vz = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
};

struct ActivePowerStats {
    PowerSumStats sums;
    ActiveCoefficients coeffs;
    CorrelationTerms corr;
};

// E|h| for a unit-power Rician envelope.
double rician_mean_envelope(double k);

CascadeMoments cascade_moments(const ChannelParams& params, double zeta, int n_elements);

PowerSumStats power_sum_stats(const ChannelParams& params, int n_elements);

ActiveCoefficients active_coefficients(const LinkConfig& link, const LinkAngles& nominal_t,
                                       const LinkAngles& nominal_r, int n_elements);

CorrelationTerms correlation_rho(const ChannelParams& params, const LinkConfig& link,
                                 int n_elements, double c1, double c2);

ActivePowerStats active_power_stats(const ChannelParams& params, const LinkConfig& link,
                                    const LinkAngles& nominal_t, const LinkAngles& nominal_r);

}  // namespace uavirs
