// SPDX-License-Identifier: Apache-2.0
#include "uavirs/channel_stats.hpp"

#include <cmath>
#include <numbers>

#include "uavirs/error.hpp"
#include "uavirs/specialfn.hpp"

namespace uavirs {

namespace {

constexpr double kPi = std::numbers::pi;

double cube(double x) { return x * x * x; }

double l_half(double k) { return laguerre_half(HalfOrder::one_half, -k); }
double l_three_halves(double k) { return laguerre_half(HalfOrder::three_halves, -k); }

// Var(|h|^2) for a unit-power Rician envelope.
double power_variance(double k) { return (k * k + 4.0 * k + 2.0) / ((k + 1.0) * (k + 1.0)) - 1.0; }

void require_active(const LinkConfig& link) {
    if (link.variant != IrsVariant::active || !link.active)
        throw UsageError("operation requires the active variant");
}

}  // namespace

double ChannelParams::beta0() const { return c0 * std::pow(d0, -alpha0); }
double ChannelParams::beta1() const { return c0 * std::pow(d1, -alpha1); }

void ChannelParams::validate() const {
    for (double v : {k0, k1, alpha0, alpha1, c0, d0, d1})
        if (!std::isfinite(v)) throw DomainError("channel: non-finite parameter");
    if (k0 < 0.0 || k1 < 0.0) throw DomainError("channel: negative Rician factor");
    if (c0 <= 0.0) throw DomainError("channel: c0 must be positive");
    if (d0 <= 0.0 || d1 <= 0.0) throw DomainError("channel: distances must be positive");
}

void LinkConfig::validate() const {
    if (!(p_t >= 0.0) || !std::isfinite(p_t)) throw DomainError("link: p_t must be >= 0");
    if (m_antennas < 1) throw DomainError("link: M must be positive");
    if (n_elements < 1) throw DomainError("link: N must be positive");
    if (!(sigma2_n > 0.0)) throw DomainError("link: sigma2_n must be positive");
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw DomainError("link: zeta outside [0, 1]");
    if (!(sigma2_e >= 0.0)) throw DomainError("link: sigma2_e must be >= 0");
    if (!(gamma_th >= 0.0)) throw DomainError("link: gamma_th must be >= 0");
    if ((variant == IrsVariant::active) != active.has_value())
        throw DomainError("link: active parameters present iff variant is active");
    if (active) {
        if (!(active->sigma2_f >= 0.0)) throw DomainError("link: sigma2_f must be >= 0");
        if (!(active->p_f > 0.0)) throw DomainError("link: P_F must be positive");
    }
}

double rician_mean_envelope(double k) {
    return std::sqrt(kPi / (4.0 * (k + 1.0))) * l_half(k);
}

CascadeMoments cascade_moments(const ChannelParams& params, double zeta, int n_elements) {
    params.validate();
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw DomainError("zeta outside [0, 1]");
    if (n_elements < 1) throw DomainError("N must be positive");
    double n = n_elements;
    double kk = (params.k0 + 1.0) * (params.k1 + 1.0);
    double lag = l_half(params.k0) * l_half(params.k1);
    double path = params.c0 * std::pow(params.d0, -params.alpha0 / 2.0) *
                  std::pow(params.d1, -params.alpha1 / 2.0);
    CascadeMoments m;
    m.mu_v = n * kPi * path * std::sqrt(1.0 - zeta) / (4.0 * std::sqrt(kk)) * lag;
    m.var_v = path * path * n * (1.0 - zeta) * (1.0 - kPi * kPi / (16.0 * kk) * lag * lag);
    if (m.mu_v > 0.0 && m.var_v > 0.0) {
        m.shape = m.mu_v * m.mu_v / m.var_v;
        m.scale = m.var_v / m.mu_v;
    }
    return m;
}

PowerSumStats power_sum_stats(const ChannelParams& params, int n_elements) {
    params.validate();
    double n = n_elements;
    double b0 = params.beta0();
    double b1 = params.beta1();
    PowerSumStats s;
    s.mu_z0 = n * b1;
    s.var_z0 = n * b1 * b1 * power_variance(params.k1);
    s.mu_z1 = n * b0;
    s.var_z1 = n * b0 * b0 * power_variance(params.k0);
    return s;
}

ActiveCoefficients active_coefficients(const LinkConfig& link, const LinkAngles& nominal_t,
                                       const LinkAngles& nominal_r, int n_elements) {
    require_active(link);
    const auto& a = *link.active;
    ActiveCoefficients c;
    c.c1 = a.sigma2_f / link.sigma2_n * cube(std::cos(nominal_r.theta));
    c.c2 = link.p_t / a.p_f * link.b1() * cube(std::cos(nominal_t.theta));
    c.c3 = n_elements * a.sigma2_f / a.p_f * link.b1();
    return c;
}

CorrelationTerms correlation_rho(const ChannelParams& params, const LinkConfig& link,
                                 int n_elements, double c1, double c2) {
    require_active(link);
    double n = n_elements;
    double k0 = params.k0, k1 = params.k1;
    double cross = kPi * n * (n - 1.0) / (4.0 * std::sqrt((1.0 + k0) * (1.0 + k1))) * l_half(k0) *
                   l_half(k1);
    auto own = [&](double kp, double kq) {
        return 3.0 * kPi * n / (8.0 * std::pow(1.0 + kp, 1.5) * std::sqrt(1.0 + kq)) *
               l_three_halves(kp) * l_half(kq);
    };
    CorrelationTerms t;
    t.a0 = own(k0, k1) + cross;
    t.a1 = own(k1, k0) + cross;
    double b0 = params.beta0(), b1 = params.beta1();
    t.mu_vz = std::sqrt(b0 * b1 * (1.0 - link.zeta)) * (c1 * b1 * t.a1 + c2 * b0 * t.a0);

    auto v = cascade_moments(params, link.zeta, n_elements);
    auto z = power_sum_stats(params, n_elements);
    double den = std::sqrt(v.var_v) * std::sqrt(c1 * c1 * z.var_z0 + c2 * c2 * z.var_z1);
    if (!(den > 0.0)) throw DegenerateError("correlation undefined: sigma_v * sigma_z = 0");
    t.rho = (t.mu_vz - v.mu_v * (c1 * z.mu_z0 + c2 * z.mu_z1)) / den;
    return t;
}

ActivePowerStats active_power_stats(const ChannelParams& params, const LinkConfig& link,
                                    const LinkAngles& nominal_t, const LinkAngles& nominal_r) {
    ActivePowerStats s;
    s.sums = power_sum_stats(params, link.n_elements);
    s.coeffs = active_coefficients(link, nominal_t, nominal_r, link.n_elements);
    s.corr = correlation_rho(params, link, link.n_elements, s.coeffs.c1, s.coeffs.c2);
    return s;
}

}  // namespace uavirs
