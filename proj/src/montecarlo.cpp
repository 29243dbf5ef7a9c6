// SPDX-License-Identifier: Apache-2.0
#include "uavirs/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>

#include "uavirs/error.hpp"
#include "uavirs/kernels.hpp"

namespace uavirs {

namespace {

constexpr double kZ95 = 1.959963984540054;

unsigned resolve_threads(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

// Calls f(begin, end, shard) over contiguous trial ranges.
template <class F>
void for_each_shard(std::uint64_t trials, unsigned threads, F&& f) {
    std::uint64_t shards = std::min<std::uint64_t>(resolve_threads(threads), trials);
    if (shards <= 1) {
        f(std::uint64_t{0}, trials, 0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (std::uint64_t s = 0; s < shards; ++s) {
        std::uint64_t begin = trials * s / shards;
        std::uint64_t end = trials * (s + 1) / shards;
        pool.emplace_back([&f, begin, end, s] { f(begin, end, static_cast<unsigned>(s)); });
    }
    for (auto& t : pool) t.join();
}

std::complex<double> rician_complex_from_block(const PhiloxBlock& b, double k) {
    double los = std::sqrt(k / (k + 1.0));
    double nlos = std::sqrt(1.0 / (k + 1.0));
    double u1 = open_uniform(b[1], b[0]);
    double u2 = half_open_uniform(b[3], b[2]);
    double r = std::sqrt(-std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    return {los + nlos * r * std::cos(a), nlos * r * std::sin(a)};
}

// Array responses and element gains at zero fluctuation.
struct FullMatrixContext {
    std::vector<std::complex<double>> a_t, a_r, a_b;
    double e_t = 0.0;
    double e_r = 0.0;

    FullMatrixContext(const SystemGeometry& g, const LinkConfig& link) {
        int side = side_from_elements(link.n_elements);
        auto response = [side](const LinkAngles& a) {
            std::vector<std::complex<double>> v(static_cast<std::size_t>(side) * side);
            double ux = std::sin(a.theta) * std::cos(a.phi);
            double uy = std::sin(a.theta) * std::sin(a.phi);
            for (int ix = 0; ix < side; ++ix)
                for (int iy = 0; iy < side; ++iy)
                    v[static_cast<std::size_t>(ix) * side + iy] =
                        std::polar(1.0, -std::numbers::pi * (ix * ux + iy * uy));
            return v;
        };
        a_t = response(g.t_angles);
        a_r = response(g.r_angles);
        double dx = g.irs.x - g.bs.x, dy = g.irs.y - g.bs.y, dz = g.irs.z - g.bs.z;
        double theta0 = std::atan2(std::hypot(dx, dy), dz);
        double phi0 = std::atan2(dy, dx);
        a_b.resize(link.m_antennas);
        for (int m = 0; m < link.m_antennas; ++m)
            a_b[m] = std::polar(1.0, -std::numbers::pi * m * std::sin(theta0) * std::cos(phi0));
        e_t = element_pattern(g.t_angles.theta);
        e_r = element_pattern(g.r_angles.theta);
    }
};

double active_amplitude2(const LinkConfig& link, double beta0, double e_t, double sum_h_bs2) {
    return link.active->p_f / (link.p_t * beta0 * e_t * sum_h_bs2 +
                               link.n_elements * link.active->sigma2_f);
}

// Explicit cascaded channel with aligned phases and MRT, next to the reduced scalar form.
SnrPair evaluate_full_matrix(const FullMatrixContext& ctx, const ChannelParams& channel,
                             const LinkConfig& link, std::span<const std::complex<double>> g,
                             std::span<const std::complex<double>> h) {
    const std::size_t n = g.size();
    const double b0 = channel.beta0(), b1 = channel.beta1();
    const bool active = link.variant == IrsVariant::active;
    const double sigma2_f = active ? link.active->sigma2_f : 0.0;

    double sum_g2 = 0.0, sum_h2 = 0.0, cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_g2 += std::norm(g[i]);
        sum_h2 += std::norm(h[i]);
        cross += std::abs(g[i]) * std::abs(h[i]);
    }
    double amp2 = active ? active_amplitude2(link, b0, ctx.e_t, sum_g2) : 1.0;
    double amp = std::sqrt(amp2);

    std::vector<std::complex<double>> h_bar(n), g_col(n);
    for (std::size_t i = 0; i < n; ++i) {
        h_bar[i] = std::sqrt(b1 * ctx.e_r) * h[i] * ctx.a_r[i];
        g_col[i] = std::sqrt(b0 * ctx.e_t) * g[i] * ctx.a_t[i];
    }
    // Row vector h_bar^H A Phi H_bar, with H_bar = g_col a_b^T (rank one).
    std::complex<double> scalar = 0.0;
    double reflect_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> phase = std::polar(1.0, std::arg(h_bar[i]) - std::arg(g_col[i]));
        scalar += std::conj(h_bar[i]) * amp * phase * g_col[i];
        reflect_norm2 += std::norm(std::conj(h_bar[i]) * amp * phase);
    }
    std::vector<std::complex<double>> row(ctx.a_b.size());
    double row_norm2 = 0.0;
    for (std::size_t m = 0; m < row.size(); ++m) {
        row[m] = scalar * ctx.a_b[m];
        row_norm2 += std::norm(row[m]);
    }
    std::complex<double> gain = 0.0;
    double w_norm2 = 0.0;
    for (std::size_t m = 0; m < row.size(); ++m) {
        std::complex<double> w = std::conj(row[m]) / std::sqrt(row_norm2);
        gain += row[m] * w;
        w_norm2 += std::norm(w);
    }
    double noise = reflect_norm2 * sigma2_f + link.p_t * link.zeta * w_norm2 * link.sigma2_e +
                   link.sigma2_n;
    SnrPair out;
    out.full = link.p_t * (1.0 - link.zeta) * std::norm(gain) / noise;

    double big_g = ctx.e_t * ctx.e_r;
    double num = link.p_t * link.m_antennas * (1.0 - link.zeta) * b0 * b1 * amp2 * big_g * cross * cross;
    double den = b1 * amp2 * ctx.e_r * sigma2_f * sum_h2 + link.p_t * link.zeta * link.sigma2_e +
                 link.sigma2_n;
    out.reduced = num / den;
    out.reflected_power = link.p_t * amp2 * b0 * ctx.e_t * sum_g2 + n * amp2 * sigma2_f;
    return out;
}

void check_batch(const ArrayConfig& array, std::span<const LinkConfig> links) {
    if (links.empty()) throw UsageError("no link configurations to simulate");
    for (const auto& l : links) {
        l.validate();
        if (l.n_elements != links[0].n_elements || l.m_antennas != links[0].m_antennas ||
            l.variant != links[0].variant)
            throw UsageError("batched links must share N, M and variant");
    }
    if (links[0].n_elements != array.n_elements())
        throw UsageError("link N does not match the array size");
}

}  // namespace

std::string to_string(SimMode mode) { return mode == SimMode::reduced ? "reduced" : "full-matrix"; }

std::string to_string(PatternMode mode) {
    return mode == PatternMode::exact ? "exact" : "treated-element-gain";
}

SimMode parse_sim_mode(const std::string& text) {
    if (text == "reduced") return SimMode::reduced;
    if (text == "full-matrix") return SimMode::full_matrix;
    throw DomainError("unknown simulation mode '" + text + "'");
}

PatternMode parse_pattern_mode(const std::string& text) {
    if (text == "exact") return PatternMode::exact;
    if (text == "treated-element-gain") return PatternMode::treated;
    throw DomainError("unknown pattern mode '" + text + "'");
}

void SimConfig::validate() const {
    if (trials < 1) throw DomainError("sim: trials must be >= 1");
}

OutageEstimate outage_estimate(std::uint64_t events, std::uint64_t trials) {
    if (trials == 0) throw DomainError("outage estimate needs at least one trial");
    OutageEstimate e;
    e.trials = trials;
    e.events = events;
    double n = static_cast<double>(trials);
    e.point = events / n;
    if (events == 0) {
        e.ci_high = std::min(1.0, 3.0 / n);
        return e;
    }
    if (events == trials) {
        e.ci_low = std::max(0.0, 1.0 - 3.0 / n);
        e.ci_high = 1.0;
        return e;
    }
    double z2 = kZ95 * kZ95;
    double denom = 1.0 + z2 / n;
    double center = (e.point + z2 / (2.0 * n)) / denom;
    double half = kZ95 * std::sqrt(e.point * (1.0 - e.point) / n + z2 / (4.0 * n * n)) / denom;
    e.ci_low = std::max(0.0, std::min(e.point, center - half));
    e.ci_high = std::min(1.0, std::max(e.point, center + half));
    return e;
}

double sample_rician_envelope(double k, CounterRng& rng) {
    return std::abs(sample_rician_complex(k, rng));
}

std::complex<double> sample_rician_complex(double k, CounterRng& rng) {
    return rician_complex_from_block(rng.next_block(), k);
}

GainDraw draw_pattern_gain(const SystemGeometry& geometry, const FluctuationModel& model,
                           const ArrayConfig& config, PatternMode mode, CounterRng& rng) {
    auto [ex, ey] = sample_fluctuation(model, rng);
    auto ft = fluctuated_angles(geometry.t_angles, ex, ey);
    auto fr = fluctuated_angles(geometry.r_angles, ex, ey);
    auto z = shifts_from_angles(geometry.t_angles, geometry.r_angles, ft, fr);
    GainDraw d;
    d.array_factor = exact_array_factor(z.z_x, z.z_y, config.n_side);
    if (mode == PatternMode::exact) {
        d.e_t = element_pattern(ft.theta);
        d.e_r = element_pattern(fr.theta);
    } else {
        d.e_t = element_pattern(geometry.t_angles.theta);
        d.e_r = element_pattern(geometry.r_angles.theta);
    }
    d.gain = d.e_t * d.e_r * d.array_factor;
    return d;
}

double simulate_pattern_gain(const SystemGeometry& geometry, const FluctuationModel& model,
                             const ArrayConfig& config, PatternMode mode, CounterRng& rng) {
    return draw_pattern_gain(geometry, model, config, mode, rng).gain;
}

std::vector<double> sample_pattern_gains(const SystemGeometry& geometry,
                                         const FluctuationModel& model, const ArrayConfig& config,
                                         PatternMode mode, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads) {
    model.validate();
    std::vector<double> out(trials);
    for_each_shard(trials, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        for (std::uint64_t t = begin; t < end; ++t) {
            CounterRng rng(seed, t);
            out[t] = simulate_pattern_gain(geometry, model, config, mode, rng);
        }
    });
    return out;
}

std::vector<OutageEstimate> simulate_outage_batch(const SystemGeometry& geometry,
                                                  const FluctuationModel& model,
                                                  const ArrayConfig& array,
                                                  const ChannelParams& channel,
                                                  std::span<const LinkConfig> links,
                                                  const SimConfig& sim) {
    sim.validate();
    model.validate();
    channel.validate();
    check_batch(array, links);
    const bool full = sim.mode == SimMode::full_matrix;
    if (full && !model.is_zero())
        throw UsageError("full-matrix mode requires zero fluctuation");

    const std::size_t n = static_cast<std::size_t>(links[0].n_elements);
    const bool active = links[0].variant == IrsVariant::active;
    const double b0 = channel.beta0(), b1 = channel.beta1();
    const auto& kt = kernels::active_table();
    const std::size_t nl = links.size();
    std::optional<FullMatrixContext> ctx;
    if (full) ctx.emplace(geometry, links[0]);

    unsigned shards = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_threads(sim.threads), sim.trials));
    std::vector<std::vector<std::uint64_t>> events(std::max(1u, shards),
                                                   std::vector<std::uint64_t>(nl, 0));

    for_each_shard(sim.trials, sim.threads, [&](std::uint64_t begin, std::uint64_t end,
                                                unsigned shard) {
        std::vector<std::uint32_t> blocks(8 * n);
        std::vector<double> env_bs(n), env_ue(n);
        std::vector<std::complex<double>> cg(n), ch(n);
        auto& ev = events[shard];
        for (std::uint64_t t = begin; t < end; ++t) {
            CounterRng rng(sim.seed, t);
            GainDraw d = draw_pattern_gain(geometry, model, array, sim.pattern_mode, rng);
            if (full) {
                for (std::size_t i = 0; i < n; ++i) cg[i] = rician_complex_from_block(rng.next_block(), channel.k0);
                for (std::size_t i = 0; i < n; ++i) ch[i] = rician_complex_from_block(rng.next_block(), channel.k1);
                for (std::size_t l = 0; l < nl; ++l) {
                    double snr = evaluate_full_matrix(*ctx, channel, links[l], cg, ch).full;
                    if (snr < links[l].gamma_th) ++ev[l];
                }
                continue;
            }
            kt.philox_fill(sim.seed, t, rng.counter(), 2 * n, blocks.data());
            kt.rician_envelopes(blocks.data(), n, channel.k0, env_bs.data());
            kt.rician_envelopes(blocks.data() + 4 * n, n, channel.k1, env_ue.data());
            auto sums = kt.cascade_sums(env_bs.data(), env_ue.data(), n);
            double s2 = sums.cross * sums.cross;
            for (std::size_t l = 0; l < nl; ++l) {
                const auto& lk = links[l];
                double noise = lk.p_t * lk.zeta * lk.sigma2_e + lk.sigma2_n;
                double amp2 = 1.0;
                if (active) {
                    amp2 = active_amplitude2(lk, b0, d.e_t, sums.power_a);
                    noise += b1 * amp2 * d.e_r * lk.active->sigma2_f * sums.power_b;
                }
                double snr = lk.p_t * lk.m_antennas * (1.0 - lk.zeta) * b0 * b1 * amp2 * d.gain * s2 / noise;
                if (snr < lk.gamma_th) ++ev[l];
            }
        }
    });

    std::vector<OutageEstimate> out;
    out.reserve(nl);
    for (std::size_t l = 0; l < nl; ++l) {
        std::uint64_t total = 0;
        for (const auto& ev : events) total += ev[l];
        out.push_back(outage_estimate(total, sim.trials));
    }
    return out;
}

OutageEstimate simulate_outage(const SystemGeometry& geometry, const FluctuationModel& model,
                               const ArrayConfig& array, const ChannelParams& channel,
                               const LinkConfig& link, const SimConfig& sim) {
    return simulate_outage_batch(geometry, model, array, channel, std::span(&link, 1), sim)[0];
}

SnrPair full_matrix_snr_check(const SystemGeometry& geometry, const FluctuationModel& model,
                              const ChannelParams& channel, const LinkConfig& link,
                              CounterRng& rng) {
    if (!model.is_zero()) throw UsageError("full-matrix check requires zero fluctuation");
    link.validate();
    channel.validate();
    FullMatrixContext ctx(geometry, link);
    std::size_t n = static_cast<std::size_t>(link.n_elements);
    std::vector<std::complex<double>> g(n), h(n);
    for (auto& v : g) v = sample_rician_complex(channel.k0, rng);
    for (auto& v : h) v = sample_rician_complex(channel.k1, rng);
    return evaluate_full_matrix(ctx, channel, link, g, h);
}

}  // namespace uavirs
