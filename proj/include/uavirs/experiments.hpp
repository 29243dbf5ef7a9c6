// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "json.hpp"
#include "uavirs/config.hpp"
#include "uavirs/pattern.hpp"
#include "uavirs/table.hpp"

namespace uavirs {

// Sup-distance between the discrete gain law (tail placed at 0) and the
// empirical CDF of sorted samples.
double kolmogorov_distance(const PatternDistribution& dist, const std::vector<double>& sorted);

// 256 log-spaced points over [1e-4 q_e, 1.05 q_e].
std::vector<double> gain_grid(double q_e, int points = 256);

nlohmann::ordered_json to_json(const PatternDistribution& dist);

struct PatternCdfResult {
    Table table;  // gain, cdf_analytical, cdf_montecarlo, D, l, N
    std::vector<PatternDistribution> distributions;
};

// One block per (N, D, l); Monte Carlo columns are empty when sim.trials is 0.
PatternCdfResult run_pattern_cdf(const ScenarioConfig& cfg);

// Rows per (N, D, l, zeta, fluctuation on/off, method, P_t).
Table run_outage_sweep(const ScenarioConfig& cfg);

// Profile rows plus one optimum row per (D, l, zeta).
Table run_optimize(const ScenarioConfig& cfg);

}  // namespace uavirs
