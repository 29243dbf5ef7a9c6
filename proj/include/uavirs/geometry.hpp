// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace uavirs {

struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

enum class Side { transmit, receive };

// Angles from the surface towards a node below it.
struct LinkAngles {
    double theta_x = 0.0;
    double theta_y = 0.0;
    double theta = 0.0;
    double phi = 0.0;  // [0, 2*pi)
    Side side = Side::transmit;

    bool at_nadir() const { return theta_x == 0.0 && theta_y == 0.0; }
};

struct SphericalAngles {
    double theta = 0.0;
    double phi = 0.0;
};

struct LinkDistances {
    double d0 = 0.0;  // surface to BS
    double d1 = 0.0;  // surface to UE
};

struct SystemGeometry {
    Position3D bs;
    Position3D irs;
    Position3D ue;
    LinkAngles t_angles;
    LinkAngles r_angles;
    double d0 = 0.0;
    double d1 = 0.0;

    static SystemGeometry from_positions(const Position3D& bs, const Position3D& irs,
                                         const Position3D& ue);
};

// Elevation and azimuth from per-axis direction angles.
SphericalAngles spherical_from_axes(double theta_x, double theta_y);

LinkAngles nominal_angles(const Position3D& irs, const Position3D& target, Side side);

SphericalAngles fluctuated_angles(const LinkAngles& nominal, double eps_x, double eps_y);

LinkDistances link_distances(const Position3D& bs, const Position3D& irs, const Position3D& ue);

}  // namespace uavirs
