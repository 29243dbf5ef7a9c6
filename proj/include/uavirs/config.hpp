// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavirs/channel_stats.hpp"
#include "uavirs/fluctuation.hpp"
#include "uavirs/geometry.hpp"
#include "uavirs/montecarlo.hpp"
#include "uavirs/outage.hpp"
#include "uavirs/scenario.hpp"

namespace uavirs {

// Parsed configuration. Sweepable keys hold lists; dB inputs are already linear.
struct ScenarioConfig {
    Position3D bs{0, 0, 20};
    Position3D irs{10, 10, 120};
    Position3D ue{40, 40, 0};
    FluctuationModel fluctuation{0.0, 0.0, 0.017453292519943295, 0.017453292519943295};  // rad

    std::vector<int> n_side{8};
    std::vector<int> sectors{15};
    std::vector<int> lobes{1};

    ChannelParams channel;  // d0/d1 filled from the positions

    std::vector<double> pt_dbm{30.0};
    std::vector<double> pt_w{1.0};
    int m_antennas = 16;
    double sigma2_n = 1e-11;  // -80 dBm
    double sigma2_f = 1e-10;  // -70 dBm
    double pf_ratio = 0.05;
    std::optional<double> p_f;  // absolute budget, W
    std::vector<double> zeta{0.0};
    std::optional<double> sigma2_e;
    double gamma_th = 10.0;  // 10 dB
    IrsVariant variant = IrsVariant::passive;

    SimConfig sim;
    std::optional<TailMode> tail_mode;
    int n_max = 400;
    std::optional<OutageMethod> method;
    std::optional<std::vector<int>> criteria;

    SystemGeometry geometry() const;
    Scenario scenario(int n_side, int sectors, int lobes, double p_t_w, double zeta) const;
    TailMode sweep_tail_mode() const { return tail_mode.value_or(TailMode::tail_as_outage); }
    TailMode optimize_tail_mode() const { return tail_mode.value_or(TailMode::drop_tail); }
};

// Flat "key = value" lines; '#' starts a comment. Values are scalars, [a, b, ...]
// lists or start:step:stop ranges. Errors name the origin, line and key.
ScenarioConfig load_config_text(std::string_view text, std::string_view origin = "<config>");
ScenarioConfig load_config_file(const std::string& path);

}  // namespace uavirs
