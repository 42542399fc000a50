// Command-line front end for the OFDM-ISAC sensing simulator: closed-form
// predictions plus seeded Monte Carlo campaigns with CSV/JSON artifacts.

#include "isac/experiments.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace isac;

struct CommonOpts {
    std::string config_path;
    std::string profile = "desk";
    std::string out_dir = "out";
    std::string format = "csv";
    int trials = -1;
    std::uint64_t seed = 1;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "scenario config (JSON)");
    cmd->add_option("--profile", o.profile, "desk|full")
        ->check(CLI::IsMember({"desk", "full"}));
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

Campaign make_campaign(const CommonOpts& o, int desk_trials, int full_trials) {
    Campaign c;
    if (!o.config_path.empty()) {
        c.scenario = load_scenario(o.config_path);
    } else {
        c.scenario = default_scenario();
        if (o.profile == "desk") {
            c.scenario.params.n_subcarriers = 64;
            c.scenario.params.n_symbols = 32;
            apply_cp_mode(c.scenario, c.scenario.cp_mode);
        }
    }
    c.trials = o.trials > 0 ? o.trials : (o.profile == "full" ? full_trials : desk_trials);
    c.master_seed = o.seed;
    c.workers = o.workers;
    c.out_dir = o.out_dir;
    c.format = o.format;
    return c;
}

void print_predictions(const ScenarioConfig& cfg) {
    const auto targets = grid_targets(cfg.params, cfg.targets);
    std::printf("scenario: N=%d M=%d N_cp=%d constellation=%s\n", cfg.params.n_subcarriers,
                cfg.params.n_symbols, cfg.params.n_cp, cfg.constellation_token.c_str());
    std::printf("noise power: %.4g W, sigma_in: %.4g W, max ISI/ICI-free range: %.1f m\n",
                noise_power_w(cfg.params), sigma_in(targets, cfg.params),
                max_isi_free_range_m(cfg.params));
    for (FilterKind f : {FilterKind::Reciprocal, FilterKind::Matched}) {
        const MomentPrediction mp = f == FilterKind::Reciprocal
                                        ? predict_moment_rf(targets, cfg.params, cfg.constellation)
                                        : predict_moment_mf(targets, cfg.params, cfg.constellation);
        const SidelobeMetrics sm =
            predict_sidelobe_metrics(targets, cfg.params, cfg.constellation, f);
        std::printf("\n[%s] floor %.2f dB\n", filter_name(f), linear_to_db(mp.sidelobe_floor));
        std::printf("%8s %8s %6s %12s %10s %10s\n", "range_m", "l", "nu", "mainlobe_db",
                    "pslr_db", "islr_db");
        for (std::size_t q = 0; q < targets.size(); ++q)
            std::printf("%8.1f %8d %6d %12.2f %10.2f %10.2f\n",
                        targets[q].l * cfg.params.range_bin_m(), targets[q].l, targets[q].nu,
                        linear_to_db(mp.mainlobe[q]), linear_to_db(sm.pslr[q]),
                        linear_to_db(sm.islr[q]));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"OFDM-ISAC range-Doppler sensing simulator"};
    app.require_subcommand(1);

    CommonOpts o_predict, o_profile, o_pslr, o_rmse, o_moments, o_echo;
    auto* cmd_predict = app.add_subcommand("predict", "closed-form mainlobe/floor/PSLR/ISLR table");
    add_common(cmd_predict, o_predict);
    auto* cmd_profile = app.add_subcommand("range-profile", "trial-averaged range profiles");
    add_common(cmd_profile, o_profile);
    auto* cmd_pslr = app.add_subcommand("sweep-pslr-islr", "PSLR/ISLR vs target range");
    add_common(cmd_pslr, o_pslr);
    auto* cmd_rmse = app.add_subcommand("sweep-rmse", "range/velocity RMSE vs sensing SNR");
    add_common(cmd_rmse, o_rmse);
    auto* cmd_moments = app.add_subcommand("validate-moments", "empirical vs predicted moments");
    add_common(cmd_moments, o_moments);
    auto* cmd_echo = app.add_subcommand("echo-check", "time vs frequency domain echo equivalence");
    add_common(cmd_echo, o_echo);

    CLI11_PARSE(app, argc, argv);
    try {
        if (cmd_predict->parsed()) {
            Campaign c = make_campaign(o_predict, 500, 5000);
            print_predictions(c.scenario);
        } else if (cmd_profile->parsed()) {
            Campaign c = make_campaign(o_profile, 500, 5000);
            run_range_profile(c);
            std::printf("range profile written to %s\n", c.out_dir.c_str());
        } else if (cmd_pslr->parsed()) {
            Campaign c = make_campaign(o_pslr, 500, 5000);
            run_pslr_islr_sweep(c);
            std::printf("PSLR/ISLR sweep written to %s\n", c.out_dir.c_str());
        } else if (cmd_rmse->parsed()) {
            Campaign c = make_campaign(o_rmse, 500, 5000);
            run_rmse_sweep(c);
            std::printf("RMSE sweep written to %s\n", c.out_dir.c_str());
        } else if (cmd_moments->parsed()) {
            Campaign c = make_campaign(o_moments, 500, 5000);
            const MomentValidationOut out = run_moment_validation(c);
            for (const auto& chk : out.checks)
                std::printf("[%s] %-16s emp %.6g pred %.6g rel_err %.3g (tol %.3g)\n",
                            chk.pass ? "PASS" : "FAIL", chk.name.c_str(), chk.empirical,
                            chk.predicted, chk.rel_error, chk.tolerance);
            if (!out.all_pass) return 1;
        } else if (cmd_echo->parsed()) {
            Campaign c = make_campaign(o_echo, 1, 1);
            if (o_echo.config_path.empty()) {
                c.scenario.params.n_subcarriers = 64;
                c.scenario.params.n_symbols = 16;
                apply_cp_mode(c.scenario, c.scenario.cp_mode);
            }
            const EchoCheckOut out = run_echo_check(c);
            for (const auto& cs : out.cases)
                std::printf("[%s] %-28s max_rel_error %.3g\n", cs.pass ? "PASS" : "FAIL",
                            cs.name.c_str(), cs.max_rel_error);
            std::printf("overall max_rel_error %.3g\n", out.max_rel_error);
            if (!out.all_pass) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
