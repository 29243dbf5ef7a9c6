// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "uavirs/geometry.hpp"
#include "uavirs/rng.hpp"

namespace uavirs {

// Gaussian attitude jitter along the two surface axes, radians.
struct FluctuationModel {
    double mu_x = 0.0;
    double mu_y = 0.0;
    double sigma_x = 0.0;
    double sigma_y = 0.0;

    void validate() const;
    bool is_zero() const {
        return mu_x == 0.0 && mu_y == 0.0 && sigma_x == 0.0 && sigma_y == 0.0;
    }
};

// d(theta)/d(eps_k) and d(phi)/d(eps_k).
struct AngleJacobian {
    double theta_x = 0.0;
    double theta_y = 0.0;
    double phi_x = 0.0;
    double phi_y = 0.0;
};

struct AngleErrorStats {
    double mu_theta = 0.0;
    double var_theta = 0.0;
    double mu_phi = 0.0;
    double var_phi = 0.0;
};

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

// Linearized shifts; error ordering is (theta_t, phi_t, theta_r, phi_r).
struct ShiftStats {
    double mu_x = 0.0;
    double mu_y = 0.0;
    double sigma_x = 0.0;
    double sigma_y = 0.0;
    Mat4 cov{};
    Vec4 a_x{};
    Vec4 a_y{};
    Vec4 mu_eps{};
};

AngleJacobian angle_jacobian(const LinkAngles& angles);

AngleErrorStats angle_error_stats(const AngleJacobian& jac, const FluctuationModel& model);

ShiftStats shift_stats(const AngleJacobian& t_jac, const AngleJacobian& r_jac,
                       const LinkAngles& t_angles, const LinkAngles& r_angles,
                       const FluctuationModel& model);

ShiftStats shift_stats(const SystemGeometry& geometry, const FluctuationModel& model);

std::array<double, 2> sample_fluctuation(const FluctuationModel& model, CounterRng& rng);

}  // namespace uavirs
