#pragma once

#include "isac/types.hpp"

#include <utility>
#include <vector>

namespace isac {

/// Radar/system parameters. Gains and noise figure are linear here; dB
/// conversions happen once at config parse time.
struct SystemParams {
    double carrier_hz = 28e9;
    double subcarrier_spacing_hz = 120e3;
    int n_subcarriers = 256; // N
    int n_symbols = 128;     // M
    int n_cp = 18;           // CP length in samples
    double tx_gain = 1.0;
    double rx_gain = 1.0;
    double noise_figure = 1.0;
    double temperature_k = 290.0;
    double c0 = kSpeedOfLight;

    double core_symbol_s() const { return 1.0 / subcarrier_spacing_hz; }       // T
    double sample_interval_s() const { return core_symbol_s() / n_subcarriers; } // T_sam
    double bandwidth_hz() const { return n_subcarriers * subcarrier_spacing_hz; } // B
    int samples_per_symbol() const { return n_subcarriers + n_cp; }            // N_s
    double symbol_duration_s() const { return samples_per_symbol() * sample_interval_s(); } // T_s
    double observation_time_s() const { return n_symbols * symbol_duration_s(); } // T_obs

    double range_bin_m() const { return c0 / (2.0 * bandwidth_hz()); }
    double velocity_bin_mps() const { return c0 / (2.0 * carrier_hz * observation_time_s()); }
    double max_unambiguous_range_m() const { return n_subcarriers * range_bin_m(); }
    double max_unambiguous_velocity_mps() const { return n_symbols * velocity_bin_mps(); }

    void validate() const; // throws std::invalid_argument on broken invariants
};

struct Target {
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double rcs_m2 = 1.0;
    double phase_rad = 0.0; // optional echo phase, default 0
};

/// Target snapped to the delay/Doppler grid, with the generalized coefficient.
struct GridTarget {
    int l = 0;        // delay bin
    int nu = 0;       // Doppler bin
    cplx alpha;       // raw echo amplitude
    cplx alpha_tilde; // attenuated by (1 - rho) when beyond the CP
    double rho = 0.0; // max(0, l - N_cp) / N
    bool beyond_cp = false;
};

struct LinkBudget {
    double alpha = 0.0;   // amplitude (linear)
    double delay_s = 0.0; // round-trip delay
    double doppler_hz = 0.0;
};

/// Free-space radar equation: alpha, tau = 2R/c0, f_d = 2 v f_c / c0.
LinkBudget link_budget(const SystemParams& p, const Target& t);

/// sigma^2 = F k B T_temp.
double noise_power_w(const SystemParams& p);

/// Rounds (tau, f_d) to integer (delay, Doppler) bins, reduced mod N / mod M.
/// Throws std::domain_error outside the unambiguous window.
std::pair<int, int> snap_to_grid(const SystemParams& p, double tau_s, double doppler_hz);

/// Grid-snaps all targets and partitions them: within-CP targets first,
/// beyond-CP targets after, order stable within each part.
std::vector<GridTarget> grid_targets(const SystemParams& p, const std::vector<Target>& targets);

/// c0 * N_cp * T_sam / 2 — the longest range free of ISI/ICI.
double max_isi_free_range_m(const SystemParams& p);

} // namespace isac
