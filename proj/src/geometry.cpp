// SPDX-License-Identifier: Apache-2.0
#include "uavirs/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uavirs/error.hpp"

namespace uavirs {

namespace {

void require_finite(const Position3D& p, const char* name) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw GeometryError(std::string(name) + ": non-finite coordinate");
    if (p.z < 0.0) throw GeometryError(std::string(name) + ": negative altitude");
}

double distance(const Position3D& a, const Position3D& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

}  // namespace

SphericalAngles spherical_from_axes(double theta_x, double theta_y) {
    double tx = std::tan(theta_x);
    double ty = std::tan(theta_y);
    SphericalAngles out;
    out.theta = std::atan(std::sqrt(tx * tx + ty * ty));
    if (tx == 0.0 && ty == 0.0) {
        out.phi = 0.0;
        return out;
    }
    double phi = std::atan2(ty, tx);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    out.phi = phi;
    return out;
}

LinkAngles nominal_angles(const Position3D& irs, const Position3D& target, Side side) {
    require_finite(irs, "irs");
    require_finite(target, "target");
    double drop = irs.z - target.z;
    if (!(drop > 0.0)) throw GeometryError("target is not below the surface");
    LinkAngles a;
    a.side = side;
    a.theta_x = std::atan((target.x - irs.x) / drop);
    a.theta_y = std::atan((target.y - irs.y) / drop);
    auto sph = spherical_from_axes(a.theta_x, a.theta_y);
    a.theta = sph.theta;
    a.phi = sph.phi;
    return a;
}

SphericalAngles fluctuated_angles(const LinkAngles& nominal, double eps_x, double eps_y) {
    double tx = nominal.theta_x + eps_x;
    double ty = nominal.theta_y + eps_y;
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(std::abs(tx) < half_pi) || !(std::abs(ty) < half_pi))
        throw DomainError("fluctuated angle reaches the tangent pole");
    return spherical_from_axes(tx, ty);
}

LinkDistances link_distances(const Position3D& bs, const Position3D& irs, const Position3D& ue) {
    LinkDistances d{distance(irs, bs), distance(irs, ue)};
    if (d.d0 == 0.0) throw GeometryError("BS coincides with the surface");
    if (d.d1 == 0.0) throw GeometryError("UE coincides with the surface");
    if (distance(bs, ue) == 0.0) throw GeometryError("BS coincides with the UE");
    return d;
}

SystemGeometry SystemGeometry::from_positions(const Position3D& bs, const Position3D& irs,
                                              const Position3D& ue) {
    SystemGeometry g;
    g.bs = bs;
    g.irs = irs;
    g.ue = ue;
    auto d = link_distances(bs, irs, ue);
    g.d0 = d.d0;
    g.d1 = d.d1;
    g.t_angles = nominal_angles(irs, bs, Side::transmit);
    g.r_angles = nominal_angles(irs, ue, Side::receive);
    return g;
}

}  // namespace uavirs
