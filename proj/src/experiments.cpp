// SPDX-License-Identifier: Apache-2.0
#include "uavirs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "uavirs/montecarlo.hpp"
#include "uavirs/optimizer.hpp"

namespace uavirs {

double kolmogorov_distance(const PatternDistribution& dist, const std::vector<double>& sorted) {
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(dist.size() + 1);
    atoms.emplace_back(0.0, dist.tail_mass());
    for (std::size_t k = 0; k < dist.size(); ++k)
        atoms.emplace_back(dist.gains()[k], dist.masses()[k]);
    std::sort(atoms.begin(), atoms.end());

    const double n = static_cast<double>(sorted.size());
    std::size_t ia = 0;
    std::size_t is = 0;
    double fa = 0.0;
    double worst = 0.0;
    while (ia < atoms.size() || is < sorted.size()) {
        double v = ia < atoms.size() ? atoms[ia].first : sorted[is];
        if (is < sorted.size()) v = std::min(v, sorted[is]);
        while (ia < atoms.size() && atoms[ia].first <= v) fa += atoms[ia++].second;
        while (is < sorted.size() && sorted[is] <= v) ++is;
        const double fs = n > 0 ? static_cast<double>(is) / n : 0.0;
        worst = std::max(worst, std::fabs(fa - fs));
    }
    return worst;
}

std::vector<double> gain_grid(double q_e, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double lo = std::log(1e-4 * q_e);
    const double hi = std::log(1.05 * q_e);
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
    return grid;
}

nlohmann::ordered_json to_json(const PatternDistribution& dist) {
    nlohmann::ordered_json j;
    j["gains"] = dist.gains();
    j["masses"] = dist.masses();
    j["tail_mass"] = dist.tail_mass();
    j["element_gain"] = dist.element_gain();
    j["D"] = dist.sectors();
    j["l"] = dist.lobes();
    j["n_side"] = dist.n_side();
    return j;
}

namespace {

std::int64_t as_int(int v) { return static_cast<std::int64_t>(v); }

Cell maybe(double v, bool present) { return present ? Cell{v} : Cell{}; }

double sigma_deg(const FluctuationModel& m) {
    return std::max(m.sigma_x, m.sigma_y) * 180.0 / 3.14159265358979323846;
}

}  // namespace

PatternCdfResult run_pattern_cdf(const ScenarioConfig& cfg) {
    PatternCdfResult out;
    out.table.columns = {"gain", "cdf_analytical", "cdf_montecarlo", "D", "l", "N"};
    const auto geometry = cfg.geometry();
    const bool with_mc = cfg.sim.trials > 0;
    for (int side : cfg.n_side) {
        std::vector<double> samples;
        if (with_mc) {
            ArrayConfig probe{side, cfg.sectors.front(), cfg.lobes.front()};
            samples = sample_pattern_gains(geometry, cfg.fluctuation, probe, cfg.sim.pattern_mode,
                                           cfg.sim.trials, cfg.sim.seed, cfg.sim.threads);
            std::sort(samples.begin(), samples.end());
        }
        for (int d : cfg.sectors) {
            for (int l : cfg.lobes) {
                Scenario s = cfg.scenario(side, d, l, cfg.pt_w.front(), cfg.zeta.front());
                s.array.validate();
                auto dist = s.pattern();
                for (double g : gain_grid(dist.element_gain())) {
                    double mc = 0.0;
                    if (with_mc)
                        mc = static_cast<double>(
                                 std::upper_bound(samples.begin(), samples.end(), g) -
                                 samples.begin()) /
                             static_cast<double>(samples.size());
                    out.table.add_row({g, pattern_cdf(dist, g), maybe(mc, with_mc), as_int(d),
                                       as_int(l), as_int(side * side)});
                }
                out.distributions.push_back(std::move(dist));
            }
        }
    }
    return out;
}

Table run_outage_sweep(const ScenarioConfig& cfg) {
    Table t;
    t.columns = {"p_t_dbm", "N",       "D",      "l",       "zeta",    "sigma_deg",
                 "method",  "tail_mode", "op_analytical", "op_mc", "ci_low", "ci_high"};
    const bool with_mc = cfg.sim.trials > 0;
    std::vector<FluctuationModel> models{cfg.fluctuation};
    if (!cfg.fluctuation.is_zero()) models.push_back(FluctuationModel{});

    std::vector<OutageMethod> methods;
    if (cfg.method)
        methods = {*cfg.method};
    else if (cfg.variant == IrsVariant::active)
        methods = {OutageMethod::active_clt};
    else
        methods = {OutageMethod::passive_clt, OutageMethod::passive_gamma};

    for (int side : cfg.n_side) {
        for (double zeta : cfg.zeta) {
            for (const auto& model : models) {
                // Monte Carlo depends on neither D nor l; one batch covers the P_t sweep.
                std::vector<OutageEstimate> mc;
                if (with_mc) {
                    std::vector<LinkConfig> links;
                    Scenario base = cfg.scenario(side, cfg.sectors.front(), cfg.lobes.front(),
                                                 cfg.pt_w.front(), zeta);
                    base.fluctuation = model;
                    for (double p : cfg.pt_w) links.push_back(base.with_power(p).link);
                    mc = simulate_outage_batch(base.geometry, model, base.array, base.channel,
                                               links, cfg.sim);
                }
                for (int d : cfg.sectors) {
                    for (int l : cfg.lobes) {
                        for (auto method : methods) {
                            for (std::size_t ip = 0; ip < cfg.pt_w.size(); ++ip) {
                                Scenario s = cfg.scenario(side, d, l, cfg.pt_w[ip], zeta);
                                s.fluctuation = model;
                                double op = closed_form_outage(s, method).probability;
                                const OutageEstimate e = with_mc ? mc[ip] : OutageEstimate{};
                                t.add_row({cfg.pt_dbm[ip], as_int(side * side), as_int(d),
                                           as_int(l), zeta, sigma_deg(model), to_string(method),
                                           to_string(s.tail_mode), op, maybe(e.point, with_mc),
                                           maybe(e.ci_low, with_mc), maybe(e.ci_high, with_mc)});
                            }
                        }
                    }
                }
            }
        }
    }
    return t;
}

Table run_optimize(const ScenarioConfig& cfg) {
    Table t;
    t.columns = {"row", "N", "op", "variant", "zeta", "D", "l", "p_t_dbm"};
    const OutageMethod method = cfg.method.value_or(default_method(cfg.variant));
    const std::string variant = cfg.variant == IrsVariant::active ? "active" : "passive";
    for (std::size_t ip = 0; ip < cfg.pt_w.size(); ++ip) {
        for (int d : cfg.sectors) {
            for (int l : cfg.lobes) {
                for (double zeta : cfg.zeta) {
                    Scenario s = cfg.scenario(1, d, l, cfg.pt_w[ip], zeta);
                    s.tail_mode = cfg.optimize_tail_mode();
                    auto r = optimal_elements(s, cfg.n_max, method);
                    for (const auto& p : r.profile)
                        t.add_row({std::string("profile"), as_int(p.n_elements), p.op, variant,
                                   zeta, as_int(d), as_int(l), cfg.pt_dbm[ip]});
                    t.add_row({std::string("optimum"), as_int(r.n_opt), r.op_min, variant, zeta,
                               as_int(d), as_int(l), cfg.pt_dbm[ip]});
                }
            }
        }
    }
    return t;
}

}  // namespace uavirs
