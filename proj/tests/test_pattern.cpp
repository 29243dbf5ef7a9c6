// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <string>

#include "doctest.h"
#include "uavirs/error.hpp"
#include "uavirs/experiments.hpp"
#include "uavirs/montecarlo.hpp"
#include "uavirs/pattern.hpp"
#include "uavirs/scenario.hpp"
#include "uavirs/specialfn.hpp"

using namespace uavirs;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

namespace {

ShiftStats iso_shift(double sigma, double mu = 0.0) {
    ShiftStats s;
    s.mu_x = s.mu_y = mu;
    s.sigma_x = s.sigma_y = sigma;
    return s;
}

}  // namespace

TEST_CASE("exact array factor") {
    CHECK(exact_array_factor(0.0, 0.0, 8) == 1.0);
    CHECK(exact_array_factor(0.0, 0.0, 1) == 1.0);
    CHECK(exact_array_factor(0.25, 0.0, 8) < 1e-30);
    CHECK(exact_array_factor(0.5, 0.0, 2) == Approx(0.5).epsilon(1e-15));
    CHECK(dirichlet_power(2.0, 8) == 1.0);
    for (double z = -1.0; z <= 1.0; z += 0.0137) {
        double g = exact_array_factor(z, 0.3 * z, 16);
        CHECK(g >= 0.0);
        CHECK(g <= 1.0);
    }
}

TEST_CASE("shifts from angles") {
    LinkAngles t;
    t.theta = 0.1404;
    t.phi = 5 * pi / 4;
    LinkAngles r;
    r.theta = 0.3398;
    r.phi = pi / 4;
    auto none = shifts_from_angles(t, r, {t.theta, t.phi}, {r.theta, r.phi});
    CHECK(none.z_x == 0.0);
    CHECK(none.z_y == 0.0);
    auto one = shifts_from_angles(t, r, {0.1504, t.phi}, {r.theta, r.phi});
    CHECK(one.z_x == Approx(-0.0069964249627637).epsilon(1e-12));
    CHECK(std::fabs(one.z_x - -0.006998) < 2e-6);
}

TEST_CASE("element gain") {
    CHECK(element_gain_exact(0.0, 0.0) == 1.0);
    const double th = std::atan(std::sqrt(0.125));
    CHECK(th == Approx(0.339837).epsilon(1e-6));
    CHECK(element_gain_exact(th, th) == Approx(0.7023319615912208).epsilon(1e-14));
    CHECK(element_gain_exact(1.6, 0.3) == 0.0);
    CHECK(element_gain_nominal(0.2, 0.3) == element_gain_exact(0.2, 0.3));
}

TEST_CASE("sector gain") {
    CHECK(sector_gain(0, 15) == 1.0);
    CHECK(sector_gain(1, 5) == Approx(0.8751402000833808).epsilon(1e-14));
    CHECK(std::fabs(sector_gain(1, 5) - 0.87520) < 1e-4);
    CHECK(sector_gain(5, 5) == 0.0);
    CHECK(sector_gain(10, 5) == 0.0);
    for (int i = 1; i < 5; ++i) CHECK(sector_gain(i, 5) < sector_gain(i - 1, 5));
    CHECK_THROWS_AS(sector_gain(-1, 5), DomainError);
}

TEST_CASE("sector mass") {
    CHECK(sector_mass(0, 5, 8, 0.0, 0.02) == Approx(0.9875806693484477).epsilon(1e-14));
    CHECK(sector_mass(0, 5, 8, 0.0, 0.02) == Approx(1.0 - 2.0 * q_function(2.5)).epsilon(1e-15));
    CHECK(sector_mass(0, 5, 8, 0.0, 0.0) == 1.0);
    CHECK(sector_mass(1, 5, 8, 0.0, 0.0) == 0.0);
    for (double sigma : {0.0, 0.003, 0.02, 0.2})
        for (double mu : {0.0, 0.01, -0.07}) {
            double total = 0.0;
            for (int i = 0; i < 10 * 5 * 8; ++i) total += sector_mass(i, 5, 8, mu, sigma);
            CHECK(total == Approx(1.0).epsilon(1e-9));
        }
}

TEST_CASE("pattern distribution for a still platform") {
    auto d = pattern_distribution({8, 15, 1}, iso_shift(0.0), 0.8);
    CHECK(d.size() == 225);
    CHECK(d.gains()[0] == 0.8);
    CHECK(d.masses()[0] == 1.0);
    CHECK(std::accumulate(d.masses().begin() + 1, d.masses().end(), 0.0) == 0.0);
    CHECK(d.tail_mass() == 0.0);
    CHECK(pattern_cdf(d, 0.4) == 0.0);
    CHECK(pattern_cdf(d, 0.8) == 1.0);
}

TEST_CASE("pattern distribution invariants") {
    auto d = pattern_distribution({8, 5, 1}, iso_shift(0.02), 1.0);
    CHECK(d.masses()[0] == Approx(0.975315578470728).epsilon(1e-13));
    for (int l : {1, 2})
        for (int sectors : {5, 15, 60}) {
            const double q_e = 0.81;
            auto p = pattern_distribution({8, sectors, l}, iso_shift(0.034, 0.004), q_e);
            CHECK(p.size() == static_cast<std::size_t>(l * l * sectors * sectors));
            CHECK(p.gains()[0] == q_e);
            for (std::size_t k = 0; k < p.size(); ++k) {
                CHECK(p.masses()[k] >= 0.0);
                CHECK(p.gains()[k] >= 0.0);
                CHECK(p.gains()[k] <= q_e);
            }
            double total = std::accumulate(p.masses().begin(), p.masses().end(), p.tail_mass());
            CHECK(total == Approx(1.0).epsilon(1e-12));
            double at_zero = p.tail_mass();
            for (std::size_t k = 0; k < p.size(); ++k)
                if (p.gains()[k] == 0.0) at_zero += p.masses()[k];
            CHECK(pattern_cdf(p, 0.0) == Approx(at_zero).epsilon(1e-12));
            CHECK(pattern_cdf(p, q_e) == Approx(1.0).epsilon(1e-12));
            CHECK(pattern_cdf(p, -1.0) == 0.0);
        }
}

TEST_CASE("perfect-square element counts") {
    CHECK(side_from_elements(64) == 8);
    CHECK(side_from_elements(1) == 1);
    try {
        side_from_elements(50);
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("not a perfect square") != std::string::npos);
    }
}

TEST_CASE("finer sectorization does not increase the Kolmogorov distance") {
    const Scenario s = default_scenario();
    auto samples = sample_pattern_gains(s.geometry, s.fluctuation, s.array, PatternMode::exact,
                                        200000, 5, 1);
    std::sort(samples.begin(), samples.end());
    double prev = 1.0;
    for (int d : {5, 10, 20, 40, 80}) {
        Scenario c = s;
        c.array.sectors = d;
        const double ks = kolmogorov_distance(c.pattern(), samples);
        CHECK(ks <= prev + 1e-12);
        prev = ks;
    }
}
