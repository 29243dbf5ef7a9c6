// SPDX-License-Identifier: Apache-2.0
#include <Eigen/Dense>
#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "uavirs/error.hpp"
#include "uavirs/fluctuation.hpp"
#include "uavirs/pattern.hpp"

using namespace uavirs;
using doctest::Approx;

namespace {

const SystemGeometry kGeometry =
    SystemGeometry::from_positions({0, 0, 20}, {10, 10, 120}, {40, 40, 0});
constexpr double kDeg = 0.017453292519943295;

FluctuationModel iso(double sigma, double mu_x = 0.0, double mu_y = 0.0) {
    return {mu_x, mu_y, sigma, sigma};
}

}  // namespace

TEST_CASE("jacobian matches central differences") {
    for (const auto& a : {kGeometry.t_angles, kGeometry.r_angles}) {
        auto j = angle_jacobian(a);
        const double h = 1e-6;
        auto px = fluctuated_angles(a, h, 0.0), mx = fluctuated_angles(a, -h, 0.0);
        auto py = fluctuated_angles(a, 0.0, h), my = fluctuated_angles(a, 0.0, -h);
        CHECK(j.theta_x == Approx((px.theta - mx.theta) / (2 * h)).epsilon(1e-7));
        CHECK(j.theta_y == Approx((py.theta - my.theta) / (2 * h)).epsilon(1e-7));
        CHECK(j.phi_x == Approx((px.phi - mx.phi) / (2 * h)).epsilon(1e-7));
        CHECK(j.phi_y == Approx((py.phi - my.phi) / (2 * h)).epsilon(1e-7));
    }
}

TEST_CASE("jacobian at the UE geometry") {
    auto j = angle_jacobian(kGeometry.r_angles);
    CHECK(j.theta_x == Approx(0.6678230711206282).epsilon(1e-13));
    CHECK(j.theta_y == Approx(0.6678230711206282).epsilon(1e-13));
    CHECK(std::fabs(j.theta_x - 0.66788) < 1e-4);
}

TEST_CASE("jacobian is singular at nadir") {
    LinkAngles nadir;
    CHECK_THROWS_AS(angle_jacobian(nadir), SingularityError);
}

TEST_CASE("angle error statistics") {
    auto j = angle_jacobian(kGeometry.r_angles);
    auto s = angle_error_stats(j, iso(kDeg));
    CHECK(s.mu_theta == 0.0);
    CHECK(s.mu_phi == 0.0);
    CHECK(std::sqrt(s.var_theta) == Approx(0.6678230711206282 * kDeg * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(std::fabs(std::sqrt(s.var_theta) - 0.016487) < 5e-6);
    auto z = angle_error_stats(j, iso(0.0));
    CHECK(z.var_theta == 0.0);
    CHECK(z.var_phi == 0.0);
}

TEST_CASE("shift statistics trivial cases") {
    auto still = shift_stats(kGeometry, iso(0.0));
    CHECK(still.mu_x == 0.0);
    CHECK(still.mu_y == 0.0);
    CHECK(still.sigma_x == 0.0);
    CHECK(still.sigma_y == 0.0);
    auto zero_mean = shift_stats(kGeometry, {0.0, 0.0, 2 * kDeg, 0.5 * kDeg});
    CHECK(zero_mean.mu_x == 0.0);
    CHECK(zero_mean.mu_y == 0.0);
}

TEST_CASE("shift statistics scale linearly with sigma") {
    auto a = shift_stats(kGeometry, iso(kDeg));
    auto b = shift_stats(kGeometry, iso(2 * kDeg));
    CHECK(b.sigma_x == Approx(2 * a.sigma_x).epsilon(1e-14));
    CHECK(b.sigma_y == Approx(2 * a.sigma_y).epsilon(1e-14));
    CHECK(a.sigma_x == Approx(0.033815).epsilon(1e-4));
    CHECK(a.sigma_y == Approx(0.033815).epsilon(1e-4));
}

TEST_CASE("angle-error covariance is positive semidefinite") {
    for (auto model : {iso(kDeg), FluctuationModel{0.01, -0.02, 3 * kDeg, 0.2 * kDeg},
                       FluctuationModel{0.0, 0.0, 0.0, kDeg}}) {
        auto s = shift_stats(kGeometry, model);
        Eigen::Matrix4d c;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) c(i, j) = s.cov[i][j];
        CHECK((c - c.transpose()).norm() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(c);
        CHECK(es.eigenvalues().minCoeff() >= -1e-15 * es.eigenvalues().maxCoeff());
    }
}

TEST_CASE("linearized shift moments match exact sampling") {
    const auto model = FluctuationModel{0.2 * kDeg, -0.1 * kDeg, kDeg, 0.7 * kDeg};
    const auto lin = shift_stats(kGeometry, model);
    const int n = 200000;
    double sx = 0, sxx = 0, sy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        CounterRng rng(7, static_cast<std::uint64_t>(i));
        auto [ex, ey] = sample_fluctuation(model, rng);
        auto ft = fluctuated_angles(kGeometry.t_angles, ex, ey);
        auto fr = fluctuated_angles(kGeometry.r_angles, ex, ey);
        auto z = shifts_from_angles(kGeometry.t_angles, kGeometry.r_angles, ft, fr);
        sx += z.z_x;
        sxx += z.z_x * z.z_x;
        sy += z.z_y;
        syy += z.z_y * z.z_y;
    }
    const double mx = sx / n, my = sy / n;
    CHECK(std::sqrt(sxx / n - mx * mx) == Approx(lin.sigma_x).epsilon(0.02));
    CHECK(std::sqrt(syy / n - my * my) == Approx(lin.sigma_y).epsilon(0.02));
    CHECK(std::fabs(mx - lin.mu_x) < 0.05 * lin.sigma_x);
    CHECK(std::fabs(my - lin.mu_y) < 0.05 * lin.sigma_y);
}

TEST_CASE("sample_fluctuation") {
    CounterRng rng(3, 0);
    for (int i = 0; i < 10; ++i) {
        auto e = sample_fluctuation({0.01, -0.02, 0.0, 0.0}, rng);
        CHECK(e[0] == 0.01);
        CHECK(e[1] == -0.02);
    }
    CounterRng a(11, 4), b(11, 4);
    for (int i = 0; i < 10; ++i) CHECK(sample_fluctuation(iso(kDeg), a) == sample_fluctuation(iso(kDeg), b));
    CHECK_THROWS(FluctuationModel{0, 0, -1.0, 0}.validate());
}
