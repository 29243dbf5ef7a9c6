// SPDX-License-Identifier: Apache-2.0
#include "uavirs/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uavirs/error.hpp"
#include "uavirs/specialfn.hpp"

namespace uavirs {

namespace {

constexpr double kPi = std::numbers::pi;

double cube(double x) { return x * x * x; }

}  // namespace

void ArrayConfig::validate() const {
    if (n_side < 1) throw DomainError("array: n_side must be positive");
    if (sectors < 2) throw DomainError("array: sectors must be at least 2");
    if (lobes != 1 && lobes != 2) throw DomainError("array: lobes must be 1 or 2");
}

int side_from_elements(long long n) {
    if (n < 1) throw DomainError("n_elements must be positive");
    auto side = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) throw DomainError(std::to_string(n) + " is not a perfect square");
    return static_cast<int>(side);
}

double dirichlet_power(double z, int n_side) {
    double a = kPi * z / 2.0;
    double den = n_side * std::sin(a);
    // Removable singularity at even integer z.
    if (std::abs(den) < 1e-300) return 1.0;
    double r = std::sin(n_side * a) / den;
    return std::min(1.0, r * r);
}

double exact_array_factor(double z_x, double z_y, int n_side) {
    return dirichlet_power(z_x, n_side) * dirichlet_power(z_y, n_side);
}

PatternShift shifts_from_angles(const LinkAngles& nominal_t, const LinkAngles& nominal_r,
                                const SphericalAngles& fluct_t, const SphericalAngles& fluct_r) {
    auto ux = [](double theta, double phi) { return std::sin(theta) * std::cos(phi); };
    auto uy = [](double theta, double phi) { return std::sin(theta) * std::sin(phi); };
    PatternShift s;
    s.z_x = (ux(fluct_t.theta, fluct_t.phi) - ux(nominal_t.theta, nominal_t.phi)) +
            (ux(fluct_r.theta, fluct_r.phi) - ux(nominal_r.theta, nominal_r.phi));
    s.z_y = (uy(fluct_t.theta, fluct_t.phi) - uy(nominal_t.theta, nominal_t.phi)) +
            (uy(fluct_r.theta, fluct_r.phi) - uy(nominal_r.theta, nominal_r.phi));
    return s;
}

double element_pattern(double theta) {
    if (!(theta >= 0.0 && theta <= kPi / 2.0)) return 0.0;
    return cube(std::cos(theta));
}

double element_gain_exact(double theta_t, double theta_r) {
    return element_pattern(theta_t) * element_pattern(theta_r);
}

double element_gain_nominal(double theta_t, double theta_r) {
    return element_pattern(theta_t) * element_pattern(theta_r);
}

double sector_gain(int i, int sectors) {
    if (i < 0) throw DomainError("sector_gain: negative index");
    if (sectors < 1) throw DomainError("sector_gain: sectors must be positive");
    if (i == 0) return 1.0;
    if (i % sectors == 0) return 0.0;
    double d = sectors;
    return d * d * (1.0 - std::cos(2.0 * kPi * i / d)) / (2.0 * kPi * kPi * i * i);
}

double sector_mass(int i, int sectors, int n_side, double mu_z, double sigma_z) {
    if (i < 0) throw DomainError("sector_mass: negative index");
    if (!(sigma_z >= 0.0)) throw DomainError("sector_mass: negative sigma");
    double width = 2.0 / (static_cast<double>(sectors) * n_side);
    double lo = width * i;
    double hi = width * (i + 1);
    if (sigma_z == 0.0) {
        double m = std::abs(mu_z);
        bool inside = (i == 0 ? m >= 0.0 : m > lo) && m <= hi;
        return inside ? 1.0 : 0.0;
    }
    double p = q_function((lo - mu_z) / sigma_z) - q_function((hi - mu_z) / sigma_z) +
               q_function((lo + mu_z) / sigma_z) - q_function((hi + mu_z) / sigma_z);
    return std::max(0.0, p);
}

PatternDistribution::PatternDistribution(std::vector<double> gains, std::vector<double> masses,
                                         double tail_mass, double element_gain, int sectors,
                                         int lobes, int n_side)
    : gains_(std::move(gains)),
      masses_(std::move(masses)),
      tail_mass_(tail_mass),
      element_gain_(element_gain),
      sectors_(sectors),
      lobes_(lobes),
      n_side_(n_side) {
    if (gains_.size() != masses_.size())
        throw DomainError("pattern distribution: gains and masses differ in length");
}

PatternDistribution pattern_distribution(const ArrayConfig& config, const ShiftStats& shifts,
                                         double q_e) {
    config.validate();
    if (!(q_e >= 0.0 && q_e <= 1.0)) throw DomainError("element gain outside [0, 1]");
    int n = config.axis_sectors();
    std::vector<double> qa(n), px(n), py(n);
    double sum_x = 0.0, sum_y = 0.0;
    for (int i = 0; i < n; ++i) {
        qa[i] = sector_gain(i, config.sectors);
        px[i] = sector_mass(i, config.sectors, config.n_side, shifts.mu_x, shifts.sigma_x);
        py[i] = sector_mass(i, config.sectors, config.n_side, shifts.mu_y, shifts.sigma_y);
        sum_x += px[i];
        sum_y += py[i];
    }
    std::vector<double> gains(static_cast<std::size_t>(n) * n);
    std::vector<double> masses(gains.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::size_t k = static_cast<std::size_t>(i) * n + j;
            gains[k] = q_e * qa[i] * qa[j];
            masses[k] = px[i] * py[j];
        }
    double tail = std::max(0.0, 1.0 - sum_x * sum_y);
    return {std::move(gains), std::move(masses), tail, q_e, config.sectors, config.lobes,
            config.n_side};
}

double pattern_cdf(const PatternDistribution& dist, double g) {
    if (g < 0.0) return 0.0;
    double acc = dist.tail_mass();
    const auto& q = dist.gains();
    const auto& p = dist.masses();
    for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] <= g) acc += p[k];
    return acc;
}

}  // namespace uavirs
