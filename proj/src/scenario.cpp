// SPDX-License-Identifier: Apache-2.0
#include "uavirs/scenario.hpp"

#include <cmath>
#include <numbers>

#include "uavirs/error.hpp"

namespace uavirs {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

ShiftStats Scenario::shifts() const {
    // A still platform needs no Jacobian, so nadir geometry is fine there.
    if (fluctuation.is_zero()) return {};
    return shift_stats(geometry, fluctuation);
}

double Scenario::element_gain() const {
    return element_gain_nominal(geometry.t_angles.theta, geometry.r_angles.theta);
}

PatternDistribution Scenario::pattern() const {
    return pattern_distribution(array, shifts(), element_gain());
}

Scenario Scenario::with_elements(int n_side) const {
    Scenario s = *this;
    s.array.n_side = n_side;
    s.link.n_elements = n_side * n_side;
    return s;
}

Scenario Scenario::with_power(double p_t) const {
    Scenario s = *this;
    s.link.p_t = p_t;
    if (s.link.active) s.link.active->p_f = p_f ? *p_f : pf_ratio * p_t;
    return s;
}

Scenario Scenario::with_zeta(double zeta) const {
    Scenario s = *this;
    s.link.zeta = zeta;
    return s;
}

Scenario Scenario::without_fluctuation() const {
    Scenario s = *this;
    s.fluctuation = {};
    return s;
}

Scenario default_scenario(IrsVariant variant) {
    Scenario s;
    s.geometry = SystemGeometry::from_positions({0, 0, 20}, {10, 10, 120}, {40, 40, 0});
    s.fluctuation.sigma_x = deg_to_rad(1.0);
    s.fluctuation.sigma_y = deg_to_rad(1.0);
    s.array = {8, 15, 1};
    s.channel.k0 = db_to_linear(10.0);
    s.channel.k1 = db_to_linear(10.0);
    s.channel.alpha0 = 2.0;
    s.channel.alpha1 = 2.2;
    s.channel.c0 = db_to_linear(-30.0);
    s.channel.d0 = s.geometry.d0;
    s.channel.d1 = s.geometry.d1;
    s.link.m_antennas = 16;
    s.link.n_elements = 64;
    s.link.sigma2_n = dbm_to_watts(-80.0);
    s.link.gamma_th = db_to_linear(10.0);
    s.link.variant = variant;
    s.pf_ratio = 0.05;
    if (variant == IrsVariant::active) s.link.active = ActiveParams{dbm_to_watts(-70.0), 0.0};
    return s.with_power(dbm_to_watts(30.0));
}

OutageMethod default_method(IrsVariant variant) {
    return variant == IrsVariant::active ? OutageMethod::active_clt : OutageMethod::passive_clt;
}

OutageResult closed_form_outage(const Scenario& scenario, OutageMethod method) {
    const auto dist = scenario.pattern();
    const auto moments =
        cascade_moments(scenario.channel, scenario.link.zeta, scenario.link.n_elements);
    switch (method) {
        case OutageMethod::passive_clt:
            return outage_passive_clt(dist, moments, scenario.link, scenario.tail_mode);
        case OutageMethod::passive_gamma:
            return outage_passive_gamma(dist, moments, scenario.link, scenario.tail_mode);
        case OutageMethod::active_clt: {
            auto stats = active_power_stats(scenario.channel, scenario.link,
                                            scenario.geometry.t_angles, scenario.geometry.r_angles);
            return outage_active_clt(dist, moments, stats, scenario.link, scenario.tail_mode);
        }
        case OutageMethod::monte_carlo: break;
    }
    throw UsageError("monte-carlo is not a closed-form method");
}

}  // namespace uavirs
