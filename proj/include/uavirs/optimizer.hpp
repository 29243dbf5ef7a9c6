// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "uavirs/scenario.hpp"

namespace uavirs {

struct ProfilePoint {
    int n_elements = 0;
    double op = 0.0;
};

struct OptimizationResult {
    int n_opt = 0;
    double op_min = 1.0;
    std::vector<ProfilePoint> profile;
};

// Exhaustive search over square arrays N = 1, 4, ..., floor(sqrt(n_max))^2.
OptimizationResult optimal_elements(const Scenario& scenario, int n_max, OutageMethod method);

}  // namespace uavirs
