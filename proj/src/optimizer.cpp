// SPDX-License-Identifier: Apache-2.0
#include "uavirs/optimizer.hpp"

#include <cmath>

#include "uavirs/error.hpp"

namespace uavirs {

OptimizationResult optimal_elements(const Scenario& scenario, int n_max, OutageMethod method) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    int max_side = static_cast<int>(std::sqrt(static_cast<double>(n_max)));
    while ((max_side + 1) * (max_side + 1) <= n_max) ++max_side;
    while (max_side * max_side > n_max) --max_side;

    OptimizationResult r;
    r.profile.reserve(max_side);
    for (int side = 1; side <= max_side; ++side) {
        double op = closed_form_outage(scenario.with_elements(side), method).probability;
        r.profile.push_back({side * side, op});
        // Strict comparison keeps the smaller N on ties.
        if (r.n_opt == 0 || op < r.op_min) {
            r.n_opt = side * side;
            r.op_min = op;
        }
    }
    return r;
}

}  // namespace uavirs
