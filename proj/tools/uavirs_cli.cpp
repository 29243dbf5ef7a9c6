// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavirs/config.hpp"
#include "uavirs/experiments.hpp"
#include "uavirs/validation.hpp"

namespace {

struct CommonOptions {
    std::string config;
    std::string out;
    std::string format = "csv";
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
};

void add_common(CLI::App* app, CommonOptions& o, const std::string& default_format) {
    o.format = default_format;
    app->add_option("--config", o.config, "Configuration file (defaults apply when omitted)")
        ->check(CLI::ExistingFile);
    app->add_option("--out", o.out, "Output file (stdout when omitted)");
    app->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    app->add_option("--seed", o.seed, "Random seed, overrides sim.seed");
    app->add_option("--trials", o.trials, "Monte Carlo trials, overrides sim.trials");
}

uavirs::ScenarioConfig load(const CommonOptions& o) {
    auto cfg = o.config.empty() ? uavirs::load_config_text("") : uavirs::load_config_file(o.config);
    if (o.threads) cfg.sim.threads = *o.threads;
    if (o.seed) cfg.sim.seed = *o.seed;
    if (o.trials) cfg.sim.trials = *o.trials;
    return cfg;
}

void emit(const CommonOptions& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error(o.out + ": cannot write");
    f << text;
}

void emit_table(const CommonOptions& o, const uavirs::Table& t) {
    emit(o, o.format == "json" ? uavirs::to_json(t).dump(2) + "\n" : uavirs::to_csv(t));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage analysis for UAV-mounted reflecting surfaces"};
    app.require_subcommand(1);

    CommonOptions cdf_opts, sweep_opts, opt_opts, val_opts;
    std::string dist_out;
    std::vector<int> criteria;

    auto* cdf = app.add_subcommand("pattern-cdf", "Analytical vs Monte Carlo CDF of the pattern gain");
    add_common(cdf, cdf_opts, "csv");
    cdf->add_option("--dist-out", dist_out, "Write the discrete gain laws as JSON");

    auto* sweep = app.add_subcommand("outage-sweep", "Outage probability over transmit power");
    add_common(sweep, sweep_opts, "csv");

    auto* opt = app.add_subcommand("optimize-n", "Optimal number of surface elements");
    add_common(opt, opt_opts, "csv");

    auto* val = app.add_subcommand("validate", "Run acceptance checks and report as JSON");
    add_common(val, val_opts, "json");
    val->add_option("--criteria", criteria, "Criteria to run, overrides validate.criteria")
        ->delimiter(',')
        ->check(CLI::Range(1, uavirs::kCriterionCount));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cdf->parsed()) {
            auto result = uavirs::run_pattern_cdf(load(cdf_opts));
            emit_table(cdf_opts, result.table);
            if (!dist_out.empty()) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& d : result.distributions) arr.push_back(uavirs::to_json(d));
                std::ofstream f(dist_out, std::ios::binary);
                if (!f) throw std::runtime_error(dist_out + ": cannot write");
                f << arr.dump(2) << "\n";
            }
        } else if (sweep->parsed()) {
            emit_table(sweep_opts, uavirs::run_outage_sweep(load(sweep_opts)));
        } else if (opt->parsed()) {
            emit_table(opt_opts, uavirs::run_optimize(load(opt_opts)));
        } else if (val->parsed()) {
            auto cfg = load(val_opts);
            if (val->count("--criteria")) cfg.criteria = criteria;
            auto records = uavirs::run_validate(cfg);
            if (val_opts.format == "json") {
                emit(val_opts, uavirs::to_json(records).dump(2) + "\n");
            } else {
                uavirs::Table t;
                t.columns = {"criterion", "expected", "measured", "tolerance", "pass"};
                for (const auto& j : uavirs::to_json(records))
                    t.add_row({j["criterion"].get<std::string>(), j["expected"].dump(),
                               j["measured"].dump(), j["tolerance"].dump(),
                               std::string(j["pass"].get<bool>() ? "true" : "false")});
                emit(val_opts, uavirs::to_csv(t));
            }
            return uavirs::all_pass(records) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
