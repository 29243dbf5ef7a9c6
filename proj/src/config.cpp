// SPDX-License-Identifier: Apache-2.0
#include "uavirs/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "uavirs/error.hpp"
#include "uavirs/pattern.hpp"

namespace uavirs {

namespace {

constexpr std::size_t kMaxListSize = 100000;

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

struct Entry {
    std::string key;
    std::string raw;
    int line = 0;
};

class Reader {
public:
    Reader(std::string origin, const Entry& entry) : origin_(std::move(origin)), entry_(entry) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError(origin_ + ":" + std::to_string(entry_.line) + ": " + entry_.key + ": " +
                          msg);
    }

    std::vector<std::string> tokens() const {
        const std::string& v = entry_.raw;
        if (v.empty()) fail("missing value");
        if (v.front() == '[') {
            if (v.back() != ']') fail("unterminated list");
            std::vector<std::string> out;
            std::string inner = v.substr(1, v.size() - 2);
            if (trim(inner).empty()) fail("empty list");
            std::stringstream ss(inner);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (item.empty()) fail("empty list item");
                out.push_back(item);
            }
            return out;
        }
        return {v};
    }

    double number(const std::string& tok) const {
        errno = 0;
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
            fail("'" + tok + "' is not a finite number");
        return v;
    }

    long long integer(const std::string& tok) const {
        double v = number(tok);
        if (v != std::floor(v) || std::fabs(v) > 9.0e15) fail("'" + tok + "' is not an integer");
        return static_cast<long long>(v);
    }

    // Scalars, lists and inclusive start:step:stop ranges.
    std::vector<double> numbers() const {
        std::vector<double> out;
        for (const auto& tok : tokens()) {
            if (tok.find(':') == std::string::npos) {
                out.push_back(number(tok));
                continue;
            }
            std::stringstream ss(tok);
            std::string part;
            std::vector<double> parts;
            while (std::getline(ss, part, ':')) parts.push_back(number(trim(part)));
            if (parts.size() != 3) fail("range must be start:step:stop");
            const double start = parts[0];
            const double step = parts[1];
            const double stop = parts[2];
            if (step == 0.0 || (stop - start) / step < 0.0) fail("range step does not reach stop");
            const double span = (stop - start) / step;
            if (span > static_cast<double>(kMaxListSize)) fail("range too long");
            const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
            for (std::size_t i = 0; i < count; ++i) out.push_back(start + step * static_cast<double>(i));
        }
        if (out.size() > kMaxListSize) fail("list too long");
        return out;
    }

    double scalar() const {
        auto v = numbers();
        if (v.size() != 1) fail("expected a single value");
        return v.front();
    }

    std::vector<int> integers(int lo, int hi) const {
        std::vector<int> out;
        for (double v : numbers()) {
            if (v != std::floor(v)) fail("expected integers");
            if (v < lo || v > hi)
                fail("value " + std::to_string(static_cast<long long>(v)) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
            out.push_back(static_cast<int>(v));
        }
        return out;
    }

    int integer_in(int lo, int hi) const {
        auto v = integers(lo, hi);
        if (v.size() != 1) fail("expected a single value");
        return v.front();
    }

    std::uint64_t unsigned64() const {
        auto t = tokens();
        if (t.size() != 1) fail("expected a single value");
        const std::string& tok = t.front();
        if (tok.empty() || tok.front() == '-') fail("'" + tok + "' is not a non-negative integer");
        errno = 0;
        char* end = nullptr;
        unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
        if (*end != '\0' || errno == ERANGE) fail("'" + tok + "' is not a non-negative integer");
        return v;
    }

    std::string word() const {
        auto t = tokens();
        if (t.size() != 1) fail("expected a single value");
        return t.front();
    }

    Position3D position() const {
        auto v = numbers();
        if (v.size() != 3) fail("expected [x, y, z]");
        return {v[0], v[1], v[2]};
    }

    double angle_deg(bool non_negative) const {
        double v = scalar();
        if (non_negative && v < 0.0) fail("must be >= 0");
        if (std::fabs(v) >= 90.0) fail("must be within (-90, 90) degrees");
        return deg_to_rad(v);
    }

    template <typename F>
    auto parse_word(F&& parser) const {
        std::string w = word();
        try {
            return parser(w);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

private:
    std::string origin_;
    const Entry& entry_;
};

const std::map<std::string, std::function<void(const Reader&, ScenarioConfig&)>>& handlers() {
    using R = const Reader&;
    using C = ScenarioConfig&;
    static const std::map<std::string, std::function<void(R, C)>> table = {
        {"geometry.bs", [](R r, C c) { c.bs = r.position(); }},
        {"geometry.irs", [](R r, C c) { c.irs = r.position(); }},
        {"geometry.ue", [](R r, C c) { c.ue = r.position(); }},
        {"fluct.mu_x_deg", [](R r, C c) { c.fluctuation.mu_x = r.angle_deg(false); }},
        {"fluct.mu_y_deg", [](R r, C c) { c.fluctuation.mu_y = r.angle_deg(false); }},
        {"fluct.sigma_x_deg", [](R r, C c) { c.fluctuation.sigma_x = r.angle_deg(true); }},
        {"fluct.sigma_y_deg", [](R r, C c) { c.fluctuation.sigma_y = r.angle_deg(true); }},
        {"array.n_side",
         [](R r, C c) {
             c.n_side = r.integers(1, 4096);
         }},
        {"array.n_elements",
         [](R r, C c) {
             std::vector<int> sides;
             for (double v : r.numbers()) {
                 if (v != std::floor(v) || v < 1) r.fail("expected positive integers");
                 try {
                     sides.push_back(side_from_elements(static_cast<long long>(v)));
                 } catch (const std::exception&) {
                     r.fail(std::to_string(static_cast<long long>(v)) + " is not a perfect square");
                 }
             }
             c.n_side = sides;
         }},
        {"array.sectors", [](R r, C c) { c.sectors = r.integers(2, 100000); }},
        {"array.lobes", [](R r, C c) { c.lobes = r.integers(1, 2); }},
        {"chan.k0_db", [](R r, C c) { c.channel.k0 = db_to_linear(r.scalar()); }},
        {"chan.k1_db", [](R r, C c) { c.channel.k1 = db_to_linear(r.scalar()); }},
        {"chan.alpha0",
         [](R r, C c) {
             c.channel.alpha0 = r.scalar();
             if (c.channel.alpha0 <= 0) r.fail("must be > 0");
         }},
        {"chan.alpha1",
         [](R r, C c) {
             c.channel.alpha1 = r.scalar();
             if (c.channel.alpha1 <= 0) r.fail("must be > 0");
         }},
        {"chan.c0_db", [](R r, C c) { c.channel.c0 = db_to_linear(r.scalar()); }},
        {"link.pt_dbm",
         [](R r, C c) {
             c.pt_dbm = r.numbers();
             c.pt_w.clear();
             for (double p : c.pt_dbm) c.pt_w.push_back(dbm_to_watts(p));
         }},
        {"link.m", [](R r, C c) { c.m_antennas = r.integer_in(1, 1 << 20); }},
        {"link.sigma2_n_dbm", [](R r, C c) { c.sigma2_n = dbm_to_watts(r.scalar()); }},
        {"link.sigma2_f_dbm", [](R r, C c) { c.sigma2_f = dbm_to_watts(r.scalar()); }},
        {"link.pf_ratio",
         [](R r, C c) {
             c.pf_ratio = r.scalar();
             if (!(c.pf_ratio > 0.0)) r.fail("must be > 0");
         }},
        {"link.pf_dbm", [](R r, C c) { c.p_f = dbm_to_watts(r.scalar()); }},
        {"link.zeta",
         [](R r, C c) {
             c.zeta = r.numbers();
             for (double z : c.zeta)
                 if (z < 0.0 || z > 1.0) {
                     std::ostringstream os;
                     os << "value " << z << " outside [0, 1]";
                     r.fail(os.str());
                 }
         }},
        {"link.sigma2_e_dbm", [](R r, C c) { c.sigma2_e = dbm_to_watts(r.scalar()); }},
        {"link.gamma_th_db", [](R r, C c) { c.gamma_th = db_to_linear(r.scalar()); }},
        {"link.variant",
         [](R r, C c) {
             std::string w = r.word();
             if (w == "passive")
                 c.variant = IrsVariant::passive;
             else if (w == "active")
                 c.variant = IrsVariant::active;
             else
                 r.fail("expected passive or active, got '" + w + "'");
         }},
        {"sim.trials", [](R r, C c) { c.sim.trials = r.unsigned64(); }},
        {"sim.seed", [](R r, C c) { c.sim.seed = r.unsigned64(); }},
        {"sim.mode", [](R r, C c) { c.sim.mode = r.parse_word(parse_sim_mode); }},
        {"sim.pattern_mode",
         [](R r, C c) { c.sim.pattern_mode = r.parse_word(parse_pattern_mode); }},
        {"out.tail_mode", [](R r, C c) { c.tail_mode = r.parse_word(parse_tail_mode); }},
        {"opt.n_max", [](R r, C c) { c.n_max = r.integer_in(1, 1 << 24); }},
        {"opt.method", [](R r, C c) { c.method = r.parse_word(parse_outage_method); }},
        {"validate.criteria",
         [](R r, C c) {
             auto v = r.tokens();
             if (v.size() == 1 && v.front() == "none") {
                 c.criteria = std::vector<int>{};
                 return;
             }
             c.criteria = r.integers(1, 10);
         }},
    };
    return table;
}

[[noreturn]] void fail_global(std::string_view origin, const std::string& key,
                              const std::string& msg) {
    throw ConfigError(std::string(origin) + ": " + key + ": " + msg);
}

}  // namespace

SystemGeometry ScenarioConfig::geometry() const {
    return SystemGeometry::from_positions(bs, irs, ue);
}

Scenario ScenarioConfig::scenario(int side, int d, int l, double p_t_w, double z) const {
    Scenario s;
    s.geometry = geometry();
    s.fluctuation = fluctuation;
    s.array = {side, d, l};
    s.channel = channel;
    s.channel.d0 = s.geometry.d0;
    s.channel.d1 = s.geometry.d1;
    s.link.m_antennas = m_antennas;
    s.link.n_elements = side * side;
    s.link.sigma2_n = sigma2_n;
    s.link.zeta = z;
    s.link.sigma2_e = sigma2_e.value_or(0.0);
    s.link.gamma_th = gamma_th;
    s.link.variant = variant;
    s.pf_ratio = pf_ratio;
    s.p_f = p_f;
    if (variant == IrsVariant::active) s.link.active = ActiveParams{sigma2_f, 0.0};
    s.tail_mode = sweep_tail_mode();
    return s.with_power(p_t_w);
}

ScenarioConfig load_config_text(std::string_view text, std::string_view origin) {
    ScenarioConfig cfg;
    std::set<std::string> seen;
    const auto& table = handlers();

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string content = trim(line);
        if (content.empty()) continue;
        auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        Entry entry{trim(content.substr(0, eq)), trim(content.substr(eq + 1)), line_no};
        Reader reader(std::string(origin), entry);
        auto it = table.find(entry.key);
        if (it == table.end()) reader.fail("unknown key");
        if (!seen.insert(entry.key).second) reader.fail("duplicate key");
        it->second(reader, cfg);
    }

    if (seen.count("array.n_side") && seen.count("array.n_elements"))
        fail_global(origin, "array.n_elements", "conflicts with array.n_side");
    if (seen.count("link.pf_ratio") && seen.count("link.pf_dbm"))
        fail_global(origin, "link.pf_dbm", "conflicts with link.pf_ratio");
    for (double z : cfg.zeta)
        if (z > 0.0 && !cfg.sigma2_e)
            fail_global(origin, "link.sigma2_e_dbm", "required when link.zeta > 0");
    if (cfg.sim.mode == SimMode::full_matrix && !cfg.fluctuation.is_zero())
        fail_global(origin, "sim.mode", "full-matrix requires zero fluctuation");
    try {
        (void)cfg.geometry();
    } catch (const std::exception& e) {
        fail_global(origin, "geometry", e.what());
    }
    if (cfg.method) {
        bool active_method = *cfg.method == OutageMethod::active_clt;
        if (*cfg.method == OutageMethod::monte_carlo)
            fail_global(origin, "opt.method", "must be a closed-form method");
        if (active_method != (cfg.variant == IrsVariant::active))
            fail_global(origin, "opt.method", "does not match link.variant");
    }
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_config_text(ss.str(), path);
}

}  // namespace uavirs
