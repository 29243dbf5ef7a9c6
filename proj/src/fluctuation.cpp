// SPDX-License-Identifier: Apache-2.0
#include "uavirs/fluctuation.hpp"

#include <algorithm>
#include <cmath>

#include "uavirs/error.hpp"

namespace uavirs {

void FluctuationModel::validate() const {
    for (double v : {mu_x, mu_y, sigma_x, sigma_y})
        if (!std::isfinite(v)) throw DomainError("fluctuation model: non-finite parameter");
    if (sigma_x < 0.0 || sigma_y < 0.0) throw DomainError("fluctuation model: negative sigma");
}

AngleJacobian angle_jacobian(const LinkAngles& angles) {
    if (angles.at_nadir()) throw SingularityError("angle Jacobian is singular at nadir");
    double tx = std::tan(angles.theta_x);
    double ty = std::tan(angles.theta_y);
    double sx = 1.0 + tx * tx;
    double sy = 1.0 + ty * ty;
    double t = tx * tx + ty * ty;
    double denom = std::sqrt(t) * (1.0 + t);
    AngleJacobian j;
    j.theta_x = sx * tx / denom;
    j.theta_y = sy * ty / denom;
    j.phi_x = -sx * ty / t;
    j.phi_y = sy * tx / t;
    return j;
}

AngleErrorStats angle_error_stats(const AngleJacobian& jac, const FluctuationModel& model) {
    double vx = model.sigma_x * model.sigma_x;
    double vy = model.sigma_y * model.sigma_y;
    AngleErrorStats s;
    s.mu_theta = jac.theta_x * model.mu_x + jac.theta_y * model.mu_y;
    s.var_theta = jac.theta_x * jac.theta_x * vx + jac.theta_y * jac.theta_y * vy;
    s.mu_phi = jac.phi_x * model.mu_x + jac.phi_y * model.mu_y;
    s.var_phi = jac.phi_x * jac.phi_x * vx + jac.phi_y * jac.phi_y * vy;
    return s;
}

ShiftStats shift_stats(const AngleJacobian& t_jac, const AngleJacobian& r_jac,
                       const LinkAngles& t_angles, const LinkAngles& r_angles,
                       const FluctuationModel& model) {
    model.validate();
    double st = std::sin(t_angles.theta), ct = std::cos(t_angles.theta);
    double sr = std::sin(r_angles.theta), cr = std::cos(r_angles.theta);
    double spt = std::sin(t_angles.phi), cpt = std::cos(t_angles.phi);
    double spr = std::sin(r_angles.phi), cpr = std::cos(r_angles.phi);

    ShiftStats s;
    s.a_x = {ct * cpt, -st * spt, cr * cpr, -sr * spr};
    s.a_y = {ct * spt, st * cpt, cr * spr, sr * cpr};

    // Rows of B map (eps_x, eps_y) onto the four angle errors.
    std::array<std::array<double, 2>, 4> b = {{{t_jac.theta_x, t_jac.theta_y},
                                               {t_jac.phi_x, t_jac.phi_y},
                                               {r_jac.theta_x, r_jac.theta_y},
                                               {r_jac.phi_x, r_jac.phi_y}}};
    double vx = model.sigma_x * model.sigma_x;
    double vy = model.sigma_y * model.sigma_y;
    for (int m = 0; m < 4; ++m) {
        s.mu_eps[m] = b[m][0] * model.mu_x + b[m][1] * model.mu_y;
        for (int n = 0; n < 4; ++n) s.cov[m][n] = b[m][0] * b[n][0] * vx + b[m][1] * b[n][1] * vy;
    }

    auto quad = [&](const Vec4& a) {
        double acc = 0.0;
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) acc += a[m] * s.cov[m][n] * a[n];
        return acc;
    };
    auto dot = [](const Vec4& a, const Vec4& c) {
        return a[0] * c[0] + a[1] * c[1] + a[2] * c[2] + a[3] * c[3];
    };
    s.mu_x = dot(s.a_x, s.mu_eps);
    s.mu_y = dot(s.a_y, s.mu_eps);
    s.sigma_x = std::sqrt(std::max(0.0, quad(s.a_x)));
    s.sigma_y = std::sqrt(std::max(0.0, quad(s.a_y)));
    return s;
}

ShiftStats shift_stats(const SystemGeometry& geometry, const FluctuationModel& model) {
    return shift_stats(angle_jacobian(geometry.t_angles), angle_jacobian(geometry.r_angles),
                       geometry.t_angles, geometry.r_angles, model);
}

std::array<double, 2> sample_fluctuation(const FluctuationModel& model, CounterRng& rng) {
    auto [gx, gy] = rng.normal_pair();
    return {model.mu_x + model.sigma_x * gx, model.mu_y + model.sigma_y * gy};
}

}  // namespace uavirs
