#pragma once

#include "isac/waveform.hpp"

#include <cstdint>

namespace isac {

/// Frequency-domain received symbols. When built by the frequency-domain
/// model the free/ISI/ICI/noise components are kept separately and
/// y = y_free + y_isi - y_ici + noise entrywise.
struct EchoGrid {
    CMatrix y;
    bool has_components = false;
    CMatrix y_free;
    CMatrix y_isi;
    CMatrix y_ici;
    CMatrix noise;
};

/// Sample-level echo synthesis: the transmit stream (warm-up symbol followed
/// by the frame) delayed by each target's l_q, scaled by alpha_q, with the
/// per-symbol Doppler phase e^{j2pi m nu_q / M} of the originating transmit
/// symbol (warm-up has m = -1), plus CSCG noise of variance sigma^2 per
/// sample when noise_on.
///
/// `predecessor` is the warm-up symbol column (size N); pass an empty vector
/// for the zero-predecessor variant. Targets must be grid-snapped.
TimeSignal echo_time_domain(const SymbolGrid& grid, const std::vector<cplx>& predecessor,
                            const std::vector<GridTarget>& targets, const SystemParams& p,
                            bool noise_on, std::uint64_t noise_seed);

/// Closed-form frequency-domain decomposition into free, ISI and ICI terms
/// (beyond-CP targets only contribute to ISI/ICI), with per-bin CSCG noise
/// when noise_on. Same predecessor convention as echo_time_domain.
EchoGrid echo_frequency_domain(const SymbolGrid& grid, const std::vector<cplx>& predecessor,
                               const std::vector<GridTarget>& targets, const SystemParams& p,
                               bool noise_on, std::uint64_t noise_seed);

/// P_ISI = sum rho_q |alpha_q|^2, P_ICI = sum rho_q (1 - rho_q) |alpha_q|^2
/// over beyond-CP targets.
std::pair<double, double> interference_powers(const std::vector<GridTarget>& targets);

/// sigma^2_IN = P_ISI + P_ICI + sigma^2.
double sigma_in(const std::vector<GridTarget>& targets, const SystemParams& p);

} // namespace isac
