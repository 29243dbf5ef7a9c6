// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "uavirs/config.hpp"

namespace uavirs {

// One measured check. A criterion passes when all of its checks pass.
struct CheckRecord {
    int criterion = 0;
    std::string name;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json measured;
    nlohmann::ordered_json tolerance;
    bool pass = false;
};

struct ValidationOptions {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

constexpr int kCriterionCount = 10;

// Criteria 1..10 on the reference scenario. Failures are recorded, not thrown.
std::vector<CheckRecord> run_criterion(int criterion, const ValidationOptions& options);

// Runs cfg.criteria (all when unset) with the config's trials, seed and threads.
std::vector<CheckRecord> run_validate(const ScenarioConfig& cfg);

bool all_pass(const std::vector<CheckRecord>& records);

// Array of {criterion, expected, measured, tolerance, pass}.
nlohmann::ordered_json to_json(const std::vector<CheckRecord>& records);

}  // namespace uavirs
