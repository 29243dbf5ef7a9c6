// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "uavirs/fluctuation.hpp"
#include "uavirs/geometry.hpp"

namespace uavirs {

// Square array with half-wavelength spacing.
struct ArrayConfig {
    int n_side = 8;
    int sectors = 15;
    int lobes = 1;

    int n_elements() const { return n_side * n_side; }
    int axis_sectors() const { return lobes * sectors; }
    void validate() const;
};

// Throws unless n is a perfect square; returns its side.
int side_from_elements(long long n);

struct PatternShift {
    double z_x = 0.0;
    double z_y = 0.0;
};

// Squared Dirichlet ratio along one axis.
double dirichlet_power(double z, int n_side);

double exact_array_factor(double z_x, double z_y, int n_side);

PatternShift shifts_from_angles(const LinkAngles& nominal_t, const LinkAngles& nominal_r,
                                const SphericalAngles& fluct_t, const SphericalAngles& fluct_r);

// cos^3 on the front half-space, 0 behind it.
double element_pattern(double theta);

double element_gain_exact(double theta_t, double theta_r);
double element_gain_nominal(double theta_t, double theta_r);

double sector_gain(int i, int sectors);

double sector_mass(int i, int sectors, int n_side, double mu_z, double sigma_z);

// Discrete gain law: J = (l*D)^2 atoms, row-major over (x sector, y sector).
class PatternDistribution {
public:
    PatternDistribution(std::vector<double> gains, std::vector<double> masses, double tail_mass,
                        double element_gain, int sectors, int lobes, int n_side);

    const std::vector<double>& gains() const { return gains_; }
    const std::vector<double>& masses() const { return masses_; }
    double tail_mass() const { return tail_mass_; }
    double element_gain() const { return element_gain_; }
    int sectors() const { return sectors_; }
    int lobes() const { return lobes_; }
    int n_side() const { return n_side_; }
    std::size_t size() const { return gains_.size(); }

private:
    std::vector<double> gains_;
    std::vector<double> masses_;
    double tail_mass_;
    double element_gain_;
    int sectors_;
    int lobes_;
    int n_side_;
};

PatternDistribution pattern_distribution(const ArrayConfig& config, const ShiftStats& shifts,
                                         double q_e);

double pattern_cdf(const PatternDistribution& dist, double g);

}  // namespace uavirs
