#include "isac/scenario.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isac {

void SystemParams::validate() const {
    if (carrier_hz <= 0 || subcarrier_spacing_hz <= 0)
        throw std::invalid_argument("carrier and subcarrier spacing must be positive");
    if (n_subcarriers < 1 || n_symbols < 1)
        throw std::invalid_argument("grid dimensions must be >= 1");
    if (n_cp < 0 || n_cp > n_subcarriers)
        throw std::invalid_argument("CP length must satisfy 0 <= N_cp <= N");
    if (tx_gain <= 0 || rx_gain <= 0 || noise_figure < 1.0 || temperature_k <= 0)
        throw std::invalid_argument("gains, noise figure, temperature must be physical");
}

LinkBudget link_budget(const SystemParams& p, const Target& t) {
    if (t.range_m <= 0 || t.rcs_m2 <= 0)
        throw std::invalid_argument("target range and RCS must be positive");
    const double four_pi = 4.0 * kPi;
    const double r2 = t.range_m * t.range_m;
    const double num = t.rcs_m2 * p.c0 * p.c0 * p.tx_gain * p.rx_gain;
    const double den = four_pi * four_pi * four_pi * r2 * r2 * p.carrier_hz * p.carrier_hz;
    LinkBudget lb;
    lb.alpha = std::sqrt(num / den);
    lb.delay_s = 2.0 * t.range_m / p.c0;
    lb.doppler_hz = 2.0 * t.velocity_mps * p.carrier_hz / p.c0;
    return lb;
}

double noise_power_w(const SystemParams& p) {
    return p.noise_figure * kBoltzmann * p.bandwidth_hz() * p.temperature_k;
}

std::pair<int, int> snap_to_grid(const SystemParams& p, double tau_s, double doppler_hz) {
    const double max_tau = p.n_subcarriers * p.sample_interval_s();
    const double max_fd = p.n_symbols / p.observation_time_s();
    if (tau_s < 0 || tau_s >= max_tau) {
        std::ostringstream os;
        os << "delay " << tau_s << " s outside unambiguous window [0, " << max_tau << ") s";
        throw std::domain_error(os.str());
    }
    if (doppler_hz < 0 || doppler_hz >= max_fd) {
        std::ostringstream os;
        os << "Doppler " << doppler_hz << " Hz outside unambiguous window [0, " << max_fd
           << ") Hz";
        throw std::domain_error(os.str());
    }
    int l = static_cast<int>(std::lround(tau_s * p.bandwidth_hz())) % p.n_subcarriers;
    int nu = static_cast<int>(std::lround(doppler_hz * p.observation_time_s())) % p.n_symbols;
    return {l, nu};
}

std::vector<GridTarget> grid_targets(const SystemParams& p, const std::vector<Target>& targets) {
    std::vector<GridTarget> within, beyond;
    for (const auto& t : targets) {
        const LinkBudget lb = link_budget(p, t);
        const auto [l, nu] = snap_to_grid(p, lb.delay_s, lb.doppler_hz);
        GridTarget g;
        g.l = l;
        g.nu = nu;
        g.alpha = std::polar(lb.alpha, t.phase_rad);
        g.beyond_cp = l > p.n_cp;
        g.rho = g.beyond_cp ? static_cast<double>(l - p.n_cp) / p.n_subcarriers : 0.0;
        g.alpha_tilde = (1.0 - g.rho) * g.alpha;
        (g.beyond_cp ? beyond : within).push_back(g);
    }
    within.insert(within.end(), beyond.begin(), beyond.end());
    return within;
}

double max_isi_free_range_m(const SystemParams& p) {
    return p.c0 * p.n_cp * p.sample_interval_s() / 2.0;
}

} // namespace isac
