// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <initializer_list>
#include <string>

#include "doctest.h"
#include "uavirs/config.hpp"
#include "uavirs/error.hpp"

using namespace uavirs;

namespace {

std::string error_of(const std::string& text) {
    try {
        load_config_text(text, "t.cfg");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& s, const std::string& part) {
    return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("shipped outage sweep config") {
    auto cfg = load_config_file(UAVIRS_SOURCE_DIR "/configs/outage_passive.cfg");
    REQUIRE(cfg.pt_dbm.size() == 21);
    CHECK(cfg.pt_dbm.front() == 0.0);
    CHECK(cfg.pt_dbm.back() == 40.0);
    CHECK(cfg.n_side == std::vector<int>{8, 16});
    CHECK(cfg.sectors == std::vector<int>{15, 60});
    CHECK(cfg.zeta == std::vector<double>{0.0, 0.1});
    REQUIRE(cfg.sigma2_e);
    CHECK(*cfg.sigma2_e == doctest::Approx(1e-11));
    CHECK(cfg.channel.k0 == doctest::Approx(10.0));
    CHECK(cfg.sweep_tail_mode() == TailMode::tail_as_outage);
    CHECK(cfg.fluctuation.sigma_x == doctest::Approx(0.017453292519943295));
}

TEST_CASE("every shipped config loads") {
    for (const char* name : {"pattern_cdf", "outage_passive", "outage_active", "optimize_passive",
                             "optimize_active", "validate"})
        CHECK_NOTHROW(load_config_file(std::string(UAVIRS_SOURCE_DIR "/configs/") + name + ".cfg"));
}

TEST_CASE("defaults without any keys") {
    auto cfg = load_config_text("");
    CHECK(cfg.n_side == std::vector<int>{8});
    CHECK(cfg.pt_dbm == std::vector<double>{30.0});
    CHECK(cfg.optimize_tail_mode() == TailMode::drop_tail);
    CHECK(cfg.sweep_tail_mode() == TailMode::tail_as_outage);
}

TEST_CASE("element count must be a perfect square") {
    auto msg = error_of("array.n_elements = 50\n");
    CHECK(contains(msg, "not a perfect square"));
    CHECK(contains(msg, "t.cfg:1"));
    CHECK(contains(msg, "array.n_elements"));
}

TEST_CASE("zeta outside [0, 1] is a range error") {
    auto msg = error_of("link.sigma2_e_dbm = -80\nlink.zeta = 1.5\n");
    CHECK(contains(msg, "link.zeta"));
    CHECK(contains(msg, "t.cfg:2"));
    CHECK(contains(msg, "outside [0, 1]"));
}

TEST_CASE("unknown and duplicate keys are rejected") {
    auto unknown = error_of("# comment\nlink.pt_dbm = 10\nlink.ptdbm = 3\n");
    CHECK(contains(unknown, "t.cfg:3"));
    CHECK(contains(unknown, "link.ptdbm"));
    auto dup = error_of("link.pt_dbm = 10\nlink.pt_dbm = 20\n");
    CHECK(contains(dup, "t.cfg:2"));
    CHECK(contains(dup, "link.pt_dbm"));
}

TEST_CASE("CSI error power required when zeta is positive") {
    CHECK(contains(error_of("link.zeta = [0, 0.1]\n"), "sigma2_e"));
    CHECK(error_of("link.zeta = 0\n").empty());
}

TEST_CASE("lists and inclusive ranges") {
    auto cfg = load_config_text("link.pt_dbm = -10:5:10\narray.n_side = [4, 8, 12]\n"
                                "link.sigma2_e_dbm = -90\nlink.zeta = 0:0.05:0.1\n");
    CHECK(cfg.pt_dbm == std::vector<double>{-10, -5, 0, 5, 10});
    CHECK(cfg.n_side == std::vector<int>{4, 8, 12});
    REQUIRE(cfg.zeta.size() == 3);
    CHECK(cfg.zeta[2] == doctest::Approx(0.1));
    CHECK(*cfg.sigma2_e == doctest::Approx(1e-12));
}

TEST_CASE("conflicting and malformed values") {
    CHECK_FALSE(error_of("array.n_side = 8\narray.n_elements = 64\n").empty());
    CHECK_FALSE(error_of("link.pf_ratio = 0.1\nlink.pf_dbm = 10\n").empty());
    CHECK_FALSE(error_of("sim.trials = many\n").empty());
    CHECK_FALSE(error_of("link.pt_dbm\n").empty());
    CHECK_FALSE(error_of("geometry.ue = [40, 40, 200]\n").empty());
    CHECK_FALSE(error_of("sim.mode = full-matrix\n").empty());
    CHECK(error_of("sim.mode = full-matrix\nfluct.sigma_x_deg = 0\nfluct.sigma_y_deg = 0\n").empty());
    CHECK_FALSE(error_of("link.variant = active\nopt.method = passive-clt\n").empty());
}

TEST_CASE("validate criteria selection") {
    CHECK(load_config_text("validate.criteria = none\n").criteria->empty());
    CHECK(*load_config_text("validate.criteria = [2, 7]\n").criteria == std::vector<int>{2, 7});
    CHECK_FALSE(error_of("validate.criteria = [11]\n").empty());
}
