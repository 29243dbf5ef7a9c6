// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "uavirs/validation.hpp"

namespace {

int usage() {
    std::fprintf(stderr, "usage: acceptance [--criterion K]... [--trials N] [--seed S] [--threads T]\n");
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    uavirs::ValidationOptions options;
    std::vector<int> selection;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (i + 1 >= argc) return usage();
        const char* value = argv[++i];
        if (arg == "--criterion")
            selection.push_back(std::atoi(value));
        else if (arg == "--trials")
            options.trials = std::strtoull(value, nullptr, 10);
        else if (arg == "--seed")
            options.seed = std::strtoull(value, nullptr, 10);
        else if (arg == "--threads")
            options.threads = static_cast<unsigned>(std::atoi(value));
        else
            return usage();
    }
    if (selection.empty())
        for (int k = 1; k <= uavirs::kCriterionCount; ++k) selection.push_back(k);

    bool ok = true;
    for (int k : selection) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<uavirs::CheckRecord> records;
        std::string error;
        try {
            records = uavirs::run_criterion(k, options);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t passed = 0;
        for (const auto& r : records) passed += r.pass ? 1 : 0;
        const bool pass = error.empty() && !records.empty() && passed == records.size();
        ok = ok && pass;
        std::printf("criterion %d: %s (%zu/%zu checks, %.1f s)\n", k, pass ? "PASS" : "FAIL",
                    passed, records.size(), secs);
        for (const auto& r : records)
            std::printf("    [%s] %s: expected %s, measured %s, tolerance %s\n",
                        r.pass ? "pass" : "FAIL", r.name.c_str(), r.expected.dump().c_str(),
                        r.measured.dump().c_str(), r.tolerance.dump().c_str());
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    }
    return ok ? 0 : 1;
}
