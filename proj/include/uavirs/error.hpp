// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace uavirs {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Target not below the surface, coincident nodes.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nadir input to the angle Jacobians.
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Wrong variant or mode for the requested operation.
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace uavirs
