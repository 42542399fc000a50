#pragma once

#include "isac/analytics.hpp"
#include "isac/config.hpp"
#include "isac/estimator.hpp"

#include <functional>
#include <string>

namespace isac {

/// Seeded Monte Carlo campaign description. All randomness derives from
/// (master_seed, context, trial index), so results are independent of the
/// worker count.
struct Campaign {
    ScenarioConfig scenario;
    int trials = 500;
    std::uint64_t master_seed = 1;
    int workers = 0; // 0 = hardware concurrency
    std::vector<double> range_sweep_m; // pslr/islr axis; empty = default 10 points
    std::vector<double> snr_sweep_db;  // rmse axis; empty = default
    std::string out_dir;               // empty = no files written
    std::string format = "csv";        // "csv" or "json"
};

/// Runs body(trial) for trial = 0..trials-1 across worker threads. The body
/// must only write trial-indexed state; reductions happen afterwards in
/// trial order.
void run_trials(int trials, int workers, const std::function<void(int)>& body);

struct TrialSeeds {
    std::uint64_t symbols;
    std::uint64_t predecessor;
    std::uint64_t noise;
    std::uint64_t target;
};
TrialSeeds trial_seeds(std::uint64_t master, std::uint64_t context, int trial);

// ---------------------------------------------------------------------------

struct RangeProfileOut {
    struct Curve {
        CpMode cp;
        FilterKind filter;
        std::vector<double> emp_power; // per delay bin, trial-mean |chi(l, nu_t)|^2
        std::vector<double> ana_power; // closed form: floor + Dirichlet mainlobes
        double floor_emp = 0.0;        // trial-mean sidelobe power over the full map
        double floor_ana = 0.0;
        std::vector<double> mainlobe_emp; // per target
        std::vector<double> mainlobe_ana;
        std::vector<GridTarget> targets;
    };
    std::vector<Curve> curves; // (normal, long) x (rf, mf)
};
RangeProfileOut run_range_profile(const Campaign& campaign);

struct PslrIslrOut {
    struct Row {
        double range_m;
        CpMode cp;
        FilterKind filter;
        double pslr_emp, pslr_ana, islr_emp, islr_ana; // linear ratios
    };
    std::vector<Row> rows;
};
PslrIslrOut run_pslr_islr_sweep(const Campaign& campaign);

struct RmseOut {
    struct Row {
        double snr_db;
        CpMode cp;
        FilterKind filter;
        double range_rmse_m;
        double velocity_rmse_mps;
    };
    std::vector<Row> rows;
};
RmseOut run_rmse_sweep(const Campaign& campaign);

struct MomentValidationOut {
    struct Check {
        std::string name;
        double empirical, predicted, rel_error, tolerance;
        bool pass;
    };
    std::vector<Check> checks;
    bool all_pass = true;
};
MomentValidationOut run_moment_validation(const Campaign& campaign);

struct EchoCheckOut {
    struct Case {
        std::string name;
        double max_rel_error;
        bool pass;
    };
    std::vector<Case> cases;
    double max_rel_error = 0.0;
    bool all_pass = true;
};
EchoCheckOut run_echo_check(const Campaign& campaign);

} // namespace isac
