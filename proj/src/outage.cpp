// SPDX-License-Identifier: Apache-2.0
#include "uavirs/outage.hpp"

#include <algorithm>
#include <cmath>

#include "uavirs/error.hpp"
#include "uavirs/specialfn.hpp"

namespace uavirs {

namespace {

// Probability that a Gaussian envelope with (mu, sd) stays below s.
double gaussian_band(double mu, double sd, double s) {
    if (sd == 0.0) return s >= mu ? 1.0 : 0.0;
    return q_function((mu - s) / sd) - q_function((mu + s) / sd);
}

// Sum of p(i) * f(threshold scale / q(i)), with f(inf) = 1 at zero gain.
template <class F>
OutageResult accumulate(const PatternDistribution& dist, const LinkConfig& link,
                        OutageMethod method, TailMode tail_mode, F&& band) {
    double zero_gain = link.gamma_th > 0.0 ? 1.0 : 0.0;
    const auto& q = dist.gains();
    const auto& p = dist.masses();
    double op = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (p[i] == 0.0) continue;
        op += p[i] * (q[i] > 0.0 ? band(q[i]) : zero_gain);
    }
    if (tail_mode == TailMode::tail_as_outage) op += dist.tail_mass() * zero_gain;
    return {std::clamp(op, 0.0, 1.0), method, tail_mode, q.size()};
}

void require_variant(const LinkConfig& link, IrsVariant v) {
    link.validate();
    if (link.variant != v) throw UsageError("outage method does not match the link variant");
}

}  // namespace

std::string to_string(OutageMethod method) {
    switch (method) {
        case OutageMethod::passive_clt: return "passive-clt";
        case OutageMethod::passive_gamma: return "passive-gamma";
        case OutageMethod::active_clt: return "active-clt";
        case OutageMethod::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

std::string to_string(TailMode mode) {
    return mode == TailMode::drop_tail ? "paper-exact" : "tail-as-outage";
}

OutageMethod parse_outage_method(const std::string& text) {
    for (auto m : {OutageMethod::passive_clt, OutageMethod::passive_gamma, OutageMethod::active_clt,
                   OutageMethod::monte_carlo})
        if (to_string(m) == text) return m;
    throw DomainError("unknown outage method '" + text + "'");
}

TailMode parse_tail_mode(const std::string& text) {
    if (text == "paper-exact") return TailMode::drop_tail;
    if (text == "tail-as-outage") return TailMode::tail_as_outage;
    throw DomainError("unknown tail mode '" + text + "'");
}

OutageResult outage_passive_clt(const PatternDistribution& dist, const CascadeMoments& moments,
                                const LinkConfig& link, TailMode tail_mode) {
    require_variant(link, IrsVariant::passive);
    double scale = link.b1() * link.gamma_th / (link.m_antennas * link.gamma0());
    double sd = std::sqrt(moments.var_v);
    return accumulate(dist, link, OutageMethod::passive_clt, tail_mode, [&](double x) {
        if (moments.degenerate()) return link.gamma_th > 0.0 ? 1.0 : 0.0;
        return gaussian_band(moments.mu_v, sd, std::sqrt(scale / x));
    });
}

OutageResult outage_passive_gamma(const PatternDistribution& dist, const CascadeMoments& moments,
                                  const LinkConfig& link, TailMode tail_mode) {
    require_variant(link, IrsVariant::passive);
    double scale = link.b1() * link.gamma_th / (link.m_antennas * link.gamma0());
    return accumulate(dist, link, OutageMethod::passive_gamma, tail_mode, [&](double x) {
        if (moments.degenerate() || moments.var_v == 0.0)
            return gaussian_band(moments.mu_v, 0.0, std::sqrt(scale / x));
        return regularized_lower_gamma(moments.shape, std::sqrt(scale / x) / moments.scale);
    });
}

OutageResult outage_active_clt(const PatternDistribution& dist, const CascadeMoments& moments,
                               const ActivePowerStats& stats, const LinkConfig& link,
                               TailMode tail_mode) {
    require_variant(link, IrsVariant::active);
    double rho = stats.corr.rho;
    if (!(std::abs(rho) < 1.0)) throw DegenerateError("correlation coefficient not in (-1, 1)");
    const auto& c = stats.coeffs;
    const auto& z = stats.sums;
    double load = c.c1 * z.mu_z0 + c.c2 * z.mu_z1 + c.c3;
    double scale = link.gamma_th / (link.m_antennas * link.gamma0()) * load;
    double sd = std::sqrt(moments.var_v) * std::sqrt(1.0 - rho * rho);
    return accumulate(dist, link, OutageMethod::active_clt, tail_mode, [&](double x) {
        if (moments.degenerate()) return link.gamma_th > 0.0 ? 1.0 : 0.0;
        return gaussian_band(moments.mu_v, sd, std::sqrt(scale / x));
    });
}

}  // namespace uavirs
