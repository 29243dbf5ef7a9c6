// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uavirs/channel_stats.hpp"
#include "uavirs/fluctuation.hpp"
#include "uavirs/geometry.hpp"
#include "uavirs/pattern.hpp"
#include "uavirs/rng.hpp"

namespace uavirs {

enum class SimMode { reduced, full_matrix };
enum class PatternMode { exact, treated };

std::string to_string(SimMode mode);
std::string to_string(PatternMode mode);
SimMode parse_sim_mode(const std::string& text);
PatternMode parse_pattern_mode(const std::string& text);

struct SimConfig {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    SimMode mode = SimMode::reduced;
    PatternMode pattern_mode = PatternMode::exact;
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const;
};

struct OutageEstimate {
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
};

// 95% Wilson interval; rule of three when events is 0 or trials.
OutageEstimate outage_estimate(std::uint64_t events, std::uint64_t trials);

struct GainDraw {
    double gain = 0.0;      // element gain times array factor
    double e_t = 0.0;       // cos^3 on the BS side
    double e_r = 0.0;       // cos^3 on the UE side
    double array_factor = 0.0;
};

double sample_rician_envelope(double k, CounterRng& rng);
std::complex<double> sample_rician_complex(double k, CounterRng& rng);

GainDraw draw_pattern_gain(const SystemGeometry& geometry, const FluctuationModel& model,
                           const ArrayConfig& config, PatternMode mode, CounterRng& rng);

double simulate_pattern_gain(const SystemGeometry& geometry, const FluctuationModel& model,
                             const ArrayConfig& config, PatternMode mode, CounterRng& rng);

// One gain per trial; trial t uses stream t.
std::vector<double> sample_pattern_gains(const SystemGeometry& geometry,
                                         const FluctuationModel& model, const ArrayConfig& config,
                                         PatternMode mode, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads = 0);

OutageEstimate simulate_outage(const SystemGeometry& geometry, const FluctuationModel& model,
                               const ArrayConfig& array, const ChannelParams& channel,
                               const LinkConfig& link, const SimConfig& sim);

// Common random numbers across links that share N, M and variant (e.g. a P_t sweep).
std::vector<OutageEstimate> simulate_outage_batch(const SystemGeometry& geometry,
                                                  const FluctuationModel& model,
                                                  const ArrayConfig& array,
                                                  const ChannelParams& channel,
                                                  std::span<const LinkConfig> links,
                                                  const SimConfig& sim);

struct SnrPair {
    double full = 0.0;
    double reduced = 0.0;
    double reflected_power = 0.0;  // reduced-form amplifier output power (active)
};

SnrPair full_matrix_snr_check(const SystemGeometry& geometry, const FluctuationModel& model,
                              const ChannelParams& channel, const LinkConfig& link,
                              CounterRng& rng);

}  // namespace uavirs
