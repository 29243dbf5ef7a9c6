// SPDX-License-Identifier: Apache-2.0
#include "uavirs/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "uavirs/experiments.hpp"
#include "uavirs/montecarlo.hpp"
#include "uavirs/optimizer.hpp"
#include "uavirs/oracles.hpp"
#include "uavirs/specialfn.hpp"

namespace uavirs {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string label(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

std::string fmt(double v) { return format_number(v); }

Scenario reference(IrsVariant variant, int side, int d, int l, double pt_dbm) {
    Scenario s = default_scenario(variant).with_elements(side);
    s.array.sectors = d;
    s.array.lobes = l;
    return s.with_power(dbm_to_watts(pt_dbm));
}

SimConfig sim_of(const ValidationOptions& o) {
    SimConfig sim;
    sim.trials = o.trials;
    sim.seed = o.seed;
    sim.threads = o.threads;
    return sim;
}

std::vector<OutageEstimate> monte_carlo(const Scenario& base, const std::vector<double>& pt_dbm,
                                        const ValidationOptions& o) {
    std::vector<LinkConfig> links;
    for (double p : pt_dbm) links.push_back(base.with_power(dbm_to_watts(p)).link);
    return simulate_outage_batch(base.geometry, base.fluctuation, base.array, base.channel, links,
                                 sim_of(o));
}

struct Recorder {
    int criterion;
    std::vector<CheckRecord> records;

    void add(std::string name, Json expected, Json measured, Json tolerance, bool pass) {
        records.push_back({criterion, std::move(name), std::move(expected), std::move(measured),
                           std::move(tolerance), pass});
    }

    // Relative error of a closed form against its Monte Carlo reference.
    void relative(std::string name, double reference, double value, double tol) {
        const double err = std::fabs(value - reference) / reference;
        add(std::move(name), reference, value, Json{{"relative", tol}}, err <= tol);
    }

    void runtime(double secs, double limit) {
        add("runtime_s", Json("<= " + fmt(limit)), secs, limit, secs <= limit);
    }
};

// 1: Kolmogorov distance between the discrete gain law and exact-gain Monte Carlo.
std::vector<CheckRecord> criterion_1(const ValidationOptions& o) {
    Recorder r{1, {}};
    struct Case {
        int side, d, l;
        double bound;
        bool must_pass;
    };
    const std::vector<Case> cases = {
        {8, 15, 1, 0.05, true}, {8, 60, 1, 0.02, true}, {32, 60, 1, 0.05, false}, {32, 60, 2, 0.03, true}};
    int sampled_side = 0;
    std::vector<double> samples;
    double sample_secs = 0.0;
    for (const auto& c : cases) {
        Scenario s = reference(IrsVariant::passive, c.side, c.d, c.l, 30.0);
        if (c.side != sampled_side) {
            auto t0 = Clock::now();
            samples = sample_pattern_gains(s.geometry, s.fluctuation, s.array, PatternMode::exact,
                                           o.trials, o.seed, o.threads);
            std::sort(samples.begin(), samples.end());
            sample_secs = seconds_since(t0);
            sampled_side = c.side;
        }
        auto t0 = Clock::now();
        const double ks = kolmogorov_distance(s.pattern(), samples);
        const double secs = sample_secs + seconds_since(t0);
        const std::string tag = label({"N=" + std::to_string(c.side * c.side),
                                       "D=" + std::to_string(c.d), "l=" + std::to_string(c.l)});
        if (c.must_pass)
            r.add(tag + " ks", Json("<= " + fmt(c.bound)), ks, c.bound, ks <= c.bound);
        else
            r.add(tag + " ks", Json("> " + fmt(c.bound)), ks, c.bound, ks > c.bound);
        r.add(tag + " runtime_s", Json("<= 120"), secs, 120.0, secs <= 120.0);
    }
    return r.records;
}

// 2: passive closed forms against Monte Carlo over the transmit-power sweep.
std::vector<CheckRecord> criterion_2(const ValidationOptions& o) {
    Recorder r{2, {}};
    const auto t0 = Clock::now();
    const std::vector<double> pts = {10, 20, 30, 40};
    for (int side : {8, 16}) {
        Scenario base = reference(IrsVariant::passive, side, 60, 1, pts.front());
        const auto mc = monte_carlo(base, pts, o);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Scenario s = base.with_power(dbm_to_watts(pts[i]));
            const double clt = closed_form_outage(s, OutageMethod::passive_clt).probability;
            const double gam = closed_form_outage(s, OutageMethod::passive_gamma).probability;
            const std::string tag =
                label({"N=" + std::to_string(side * side), "P_t=" + fmt(pts[i]) + "dBm"});
            if (mc[i].point < 1e-3) {
                r.add(tag + " not evaluated (OP_mc < 1e-3)", mc[i].point, Json{clt, gam},
                      Json("OP_mc >= 1e-3"), true);
                continue;
            }
            r.relative(tag + " clt vs mc", mc[i].point, clt, 0.25);
            r.relative(tag + " gamma vs mc", mc[i].point, gam, 0.25);
            if (side == 16) r.relative(tag + " gamma vs clt", clt, gam, 0.10);
        }
    }
    r.runtime(seconds_since(t0), 600.0);
    return r.records;
}

// 3: N=256 beats N=64 at low power, the reverse at high power.
std::vector<CheckRecord> criterion_3(const ValidationOptions& o) {
    Recorder r{3, {}};
    const std::vector<double> pts = {5, 40};
    std::vector<double> cf[2];
    std::vector<OutageEstimate> mc[2];
    for (int i = 0; i < 2; ++i) {
        Scenario base = reference(IrsVariant::passive, i == 0 ? 8 : 16, 60, 1, pts.front());
        mc[i] = monte_carlo(base, pts, o);
        for (double p : pts)
            cf[i].push_back(
                closed_form_outage(base.with_power(dbm_to_watts(p)), OutageMethod::passive_clt)
                    .probability);
    }
    r.add("P_t=5dBm analytical OP(N=256) < OP(N=64)", "OP(256) < OP(64)",
          Json{{"N=64", cf[0][0]}, {"N=256", cf[1][0]}}, "strict", cf[1][0] < cf[0][0]);
    r.add("P_t=40dBm analytical OP(N=64) < OP(N=256)", "OP(64) < OP(256)",
          Json{{"N=64", cf[0][1]}, {"N=256", cf[1][1]}}, "strict", cf[0][1] < cf[1][1]);
    r.add("P_t=5dBm monte-carlo OP(N=256) < OP(N=64)", "OP(256) < OP(64)",
          Json{{"N=64", mc[0][0].point}, {"N=256", mc[1][0].point}}, "strict",
          mc[1][0].point < mc[0][0].point);
    r.add("P_t=40dBm monte-carlo OP(N=64) < OP(N=256)", "OP(64) < OP(256)",
          Json{{"N=64", mc[0][1].point}, {"N=256", mc[1][1].point}}, "strict",
          mc[0][1].point < mc[1][1].point);
    return r.records;
}

// 4: active closed form against Monte Carlo.
std::vector<CheckRecord> criterion_4(const ValidationOptions& o) {
    Recorder r{4, {}};
    const std::vector<double> pts = {-10, 0, 10};
    for (int side : {7, 8}) {
        Scenario base = reference(IrsVariant::active, side, 60, 1, pts.front());
        const auto mc = monte_carlo(base, pts, o);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double cf =
                closed_form_outage(base.with_power(dbm_to_watts(pts[i])), OutageMethod::active_clt)
                    .probability;
            const std::string tag =
                label({"N=" + std::to_string(side * side), "P_t=" + fmt(pts[i]) + "dBm"});
            if (mc[i].point < 1e-3) {
                r.add(tag + " not evaluated (OP_mc < 1e-3)", mc[i].point, cf,
                      Json("OP_mc >= 1e-3"), true);
                continue;
            }
            r.relative(tag + " active-clt vs mc", mc[i].point, cf, 0.30);
        }
    }
    return r.records;
}

// Residual CSI error power used wherever a fixed sigma_e^2 is needed.
constexpr double kSigma2eDbm = -80.0;

OptimizationResult optimum(IrsVariant variant, int d, double pt_dbm, double zeta) {
    Scenario s = reference(variant, 1, d, 1, pt_dbm);
    s.link.zeta = zeta;
    s.link.sigma2_e = dbm_to_watts(kSigma2eDbm);
    s.tail_mode = TailMode::drop_tail;
    return optimal_elements(s, 400, default_method(variant));
}

// 5: optimal element count and its invariances.
std::vector<CheckRecord> criterion_5(const ValidationOptions&) {
    Recorder r{5, {}};
    const auto t0 = Clock::now();
    struct Variant {
        IrsVariant v;
        const char* name;
        double pt;
        int target;
    };
    for (const Variant& v : {Variant{IrsVariant::passive, "passive", 30.0, 144},
                             Variant{IrsVariant::active, "active", 0.0, 49}}) {
        const int side = static_cast<int>(std::lround(std::sqrt(v.target)));
        const Json window = {(side - 1) * (side - 1), v.target, (side + 1) * (side + 1)};
        const auto d15 = optimum(v.v, 15, v.pt, 0.0);
        const auto d30 = optimum(v.v, 30, v.pt, 0.0);
        const auto z01 = optimum(v.v, 15, v.pt, 0.1);
        const int got = static_cast<int>(std::lround(std::sqrt(d15.n_opt)));
        r.add(std::string(v.name) + " D=15 n_opt", v.target, d15.n_opt,
              Json{{"square_index", 1}, {"accepted", window}}, std::abs(got - side) <= 1);
        r.add(std::string(v.name) + " n_opt D=15 vs D=30", d15.n_opt, d30.n_opt, 0,
              d15.n_opt == d30.n_opt);
        r.add(std::string(v.name) + " D=15 n_opt zeta=0 vs zeta=0.1 (sigma_e^2=" +
                  fmt(kSigma2eDbm) + "dBm)",
              d15.n_opt, z01.n_opt, 0, d15.n_opt == z01.n_opt);
    }
    r.runtime(seconds_since(t0), 60.0);
    return r.records;
}

// 6: high-power floor with fluctuation, none without.
std::vector<CheckRecord> criterion_6(const ValidationOptions&) {
    Recorder r{6, {}};
    for (int side : {8, 16}) for (int d : {15, 60}) {
        const Scenario s = reference(IrsVariant::passive, side, d, 1, 50.0);
        const std::string n = "N=" + std::to_string(side * side) + " D=" + std::to_string(d);
        const double v50 = closed_form_outage(s, OutageMethod::passive_clt).probability;
        const double v60 =
            closed_form_outage(s.with_power(dbm_to_watts(60.0)), OutageMethod::passive_clt)
                .probability;
        const double change = v50 > 0 ? std::fabs(v60 - v50) / v50 : 0.0;
        r.add(n + " sigma=1deg relative change 50->60 dBm", Json("<= 0.05"),
              Json{{"op_50", v50}, {"op_60", v60}, {"relative_change", change}}, 0.05,
              change <= 0.05);

        const Scenario still = s.without_fluctuation();
        const double s50 = closed_form_outage(still, OutageMethod::passive_clt).probability;
        const double s60 =
            closed_form_outage(still.with_power(dbm_to_watts(60.0)), OutageMethod::passive_clt)
                .probability;
        r.add(n + " sigma=0 OP(60) <= OP(50)/100 or < 1e-8", Json("OP(60) <= OP(50)/100"),
              Json{{"op_50", s50}, {"op_60", s60}}, Json{{"ratio", 100}, {"absolute", 1e-8}},
              s60 <= s50 / 100.0 || s60 < 1e-8);
    }
    return r.records;
}

// 7: active OP grows with N under fluctuation.
std::vector<CheckRecord> criterion_7(const ValidationOptions&) {
    Recorder r{7, {}};
    std::vector<double> ops;
    Json measured = Json::object();
    for (int side : {7, 20, 50}) {
        const Scenario s = reference(IrsVariant::active, side, 60, 1, 0.0);
        ops.push_back(closed_form_outage(s, OutageMethod::active_clt).probability);
        measured["N=" + std::to_string(side * side)] = ops.back();
    }
    r.add("active P_t=0dBm OP strictly increasing over N=49,400,2500", "strictly increasing",
          measured, "strict", ops[0] < ops[1] && ops[1] < ops[2]);
    return r.records;
}

// 8: explicit matrix SNR against the scalar reduction at zero fluctuation.
std::vector<CheckRecord> criterion_8(const ValidationOptions& o) {
    Recorder r{8, {}};
    for (auto v : {IrsVariant::passive, IrsVariant::active}) {
        const Scenario s = reference(v, 8, 60, 1, 30.0);
        double worst = 0.0;
        for (std::uint64_t draw = 0; draw < 100; ++draw) {
            CounterRng rng(o.seed, draw);
            const auto snr = full_matrix_snr_check(s.geometry, FluctuationModel{}, s.channel,
                                                   s.link, rng);
            worst = std::max(worst, std::fabs(snr.full - snr.reduced) / snr.reduced);
        }
        r.add(std::string(v == IrsVariant::active ? "active" : "passive") +
                  " max relative difference over 100 draws",
              0.0, worst, 1e-9, worst <= 1e-9);
    }
    return r.records;
}

// 9: special-function and sampler sanity.
std::vector<CheckRecord> criterion_9(const ValidationOptions& o) {
    Recorder r{9, {}};
    for (auto order : {HalfOrder::one_half, HalfOrder::three_halves}) {
        const long double nu = order == HalfOrder::one_half ? 0.5L : 1.5L;
        double worst = 0.0;
        for (int i = 0; i <= 800; ++i) {
            const double x = -40.0 + 0.05 * i;
            const double ref = static_cast<double>(oracle::laguerre_series(nu, x));
            worst = std::max(worst, std::fabs(laguerre_half(order, x) - ref) / std::fabs(ref));
        }
        r.add(std::string("laguerre nu=") + (order == HalfOrder::one_half ? "1/2" : "3/2") +
                  " on [-40, 0] vs series",
              0.0, worst, 1e-8, worst <= 1e-8);
    }
    {
        CounterRng rng(o.seed, 0);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const auto u = rng.uniform_pair();
            for (double x : {16.0 * u[0] - 8.0, 16.0 * u[1] - 8.0})
                worst = std::max(worst, std::fabs(q_function(x) + q_function(-x) - 1.0));
        }
        r.add("Q(x) + Q(-x) = 1 on 1000 points of [-8, 8]", 0.0, worst, 1e-12, worst <= 1e-12);
    }
    std::uint64_t stream = 1;
    for (double k : {0.0, 1.0, 10.0}) {
        CounterRng rng(o.seed, stream++);
        double m2 = 0.0;
        for (std::uint64_t i = 0; i < o.trials; ++i) {
            const double a = sample_rician_envelope(k, rng);
            m2 += a * a;
        }
        m2 /= static_cast<double>(o.trials);
        r.add("rician second moment K=" + fmt(k), 1.0, m2, Json{{"relative", 0.005}},
              std::fabs(m2 - 1.0) <= 0.005);
    }
    return r.records;
}

// 10: imperfect CSI puts a floor under OP at high power for any sigma_e^2 > 0.
std::vector<CheckRecord> criterion_10(const ValidationOptions&) {
    Recorder r{10, {}};
    for (double s2e : {-90.0, -80.0, -70.0}) {
        for (bool still : {false, true}) {
            Scenario s = reference(IrsVariant::passive, 8, 60, 1, 100.0);
            if (still) s = s.without_fluctuation();
            s.link.zeta = 0.1;
            s.link.sigma2_e = dbm_to_watts(s2e);
            const double a = closed_form_outage(s, OutageMethod::passive_clt).probability;
            const double b =
                closed_form_outage(s.with_power(dbm_to_watts(110.0)), OutageMethod::passive_clt)
                    .probability;
            const double change = std::fabs(b - a);
            r.add(label({"zeta=0.1", "sigma_e^2=" + fmt(s2e) + "dBm",
                         still ? "sigma=0" : "sigma=1deg", "OP(100dBm) vs OP(110dBm)"}),
                  Json("|OP(110) - OP(100)| <= 0.05 OP(100) + 1e-12"),
                  Json{{"op_100", a}, {"op_110", b}}, Json{{"relative", 0.05}, {"absolute", 1e-12}},
                  change <= 0.05 * a + 1e-12);
        }
    }
    return r.records;
}

}  // namespace

std::vector<CheckRecord> run_criterion(int criterion, const ValidationOptions& options) {
    switch (criterion) {
        case 1: return criterion_1(options);
        case 2: return criterion_2(options);
        case 3: return criterion_3(options);
        case 4: return criterion_4(options);
        case 5: return criterion_5(options);
        case 6: return criterion_6(options);
        case 7: return criterion_7(options);
        case 8: return criterion_8(options);
        case 9: return criterion_9(options);
        case 10: return criterion_10(options);
        default: break;
    }
    return {{criterion, "unknown criterion", nullptr, nullptr, nullptr, false}};
}

std::vector<CheckRecord> run_validate(const ScenarioConfig& cfg) {
    ValidationOptions o;
    o.trials = cfg.sim.trials;
    o.seed = cfg.sim.seed;
    o.threads = cfg.sim.threads;
    std::vector<int> selection;
    if (cfg.criteria)
        selection = *cfg.criteria;
    else
        for (int k = 1; k <= kCriterionCount; ++k) selection.push_back(k);
    std::vector<CheckRecord> out;
    for (int k : selection) {
        CheckRecord failure{k, "error", nullptr, nullptr, nullptr, false};
        try {
            auto recs = run_criterion(k, o);
            out.insert(out.end(), recs.begin(), recs.end());
        } catch (const std::exception& e) {
            failure.measured = e.what();
            out.push_back(failure);
        }
    }
    return out;
}

bool all_pass(const std::vector<CheckRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

nlohmann::ordered_json to_json(const std::vector<CheckRecord>& records) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["criterion"] = std::to_string(r.criterion) + ": " + r.name;
        j["expected"] = r.expected;
        j["measured"] = r.measured;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace uavirs
