// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "uavirs/channel_stats.hpp"
#include "uavirs/fluctuation.hpp"
#include "uavirs/geometry.hpp"
#include "uavirs/outage.hpp"
#include "uavirs/pattern.hpp"

namespace uavirs {

// One fully specified operating point, linear units.
struct Scenario {
    SystemGeometry geometry;
    FluctuationModel fluctuation;
    ArrayConfig array;
    ChannelParams channel;
    LinkConfig link;
    double pf_ratio = 0.05;     // active budget as a fraction of P_t
    std::optional<double> p_f;  // absolute budget, W; overrides pf_ratio
    TailMode tail_mode = TailMode::tail_as_outage;

    ShiftStats shifts() const;
    double element_gain() const;
    PatternDistribution pattern() const;

    Scenario with_elements(int n_side) const;
    Scenario with_power(double p_t) const;
    Scenario with_zeta(double zeta) const;
    Scenario without_fluctuation() const;
};

// Defaults: BS (0,0,20), IRS (10,10,120), UE (40,40,0), M=16, alpha 2/2.2,
// c0=-30 dB, K=10 dB, sigma_n^2=-80 dBm, sigma_f^2=-70 dBm, gamma_th=10 dB, sigma=1 deg.
Scenario default_scenario(IrsVariant variant = IrsVariant::passive);

OutageResult closed_form_outage(const Scenario& scenario, OutageMethod method);

OutageMethod default_method(IrsVariant variant);

double db_to_linear(double db);
double dbm_to_watts(double dbm);
double deg_to_rad(double deg);

}  // namespace uavirs
