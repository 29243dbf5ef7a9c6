// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

#include "uavirs/channel_stats.hpp"
#include "uavirs/pattern.hpp"

namespace uavirs {

enum class OutageMethod { passive_clt, passive_gamma, active_clt, monte_carlo };

// drop_tail ("paper-exact") drops the tail mass; tail_as_outage counts it as certain outage.
enum class TailMode { drop_tail, tail_as_outage };

struct OutageResult {
    double probability = 0.0;
    OutageMethod method = OutageMethod::passive_clt;
    TailMode tail_mode = TailMode::tail_as_outage;
    std::size_t atoms_used = 0;
};

std::string to_string(OutageMethod method);
std::string to_string(TailMode mode);
OutageMethod parse_outage_method(const std::string& text);
TailMode parse_tail_mode(const std::string& text);

OutageResult outage_passive_clt(const PatternDistribution& dist, const CascadeMoments& moments,
                                const LinkConfig& link, TailMode tail_mode);

OutageResult outage_passive_gamma(const PatternDistribution& dist, const CascadeMoments& moments,
                                  const LinkConfig& link, TailMode tail_mode);

OutageResult outage_active_clt(const PatternDistribution& dist, const CascadeMoments& moments,
                               const ActivePowerStats& stats, const LinkConfig& link,
                               TailMode tail_mode);

}  // namespace uavirs
