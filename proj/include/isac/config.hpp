#pragma once

#include "isac/constellation.hpp"
#include "isac/scenario.hpp"

#include <cstdint>
#include <string>

namespace isac {

enum class CpMode { Normal, Long, Explicit };

/// Fully resolved scenario: system parameters (linear units), alphabet,
/// target list, RNG seed.
struct ScenarioConfig {
    SystemParams params; // n_cp resolved from the cp spec
    CpMode cp_mode = CpMode::Normal;
    std::string constellation_token = "qam1024";
    Constellation constellation;
    std::vector<Target> targets;
    std::uint64_t seed = 1;
    bool warmup_symbol = true; // false selects the zero-predecessor variant
};

/// 5G NR normal CP at this numerology: 18 samples (0.586 us at 30.72 MHz).
inline constexpr int kNormalCpSamples = 18;

int resolve_cp_samples(CpMode mode, int explicit_samples, const SystemParams& p);
void apply_cp_mode(ScenarioConfig& cfg, CpMode mode);
inline const char* cp_mode_name(CpMode m) {
    return m == CpMode::Normal ? "normal" : (m == CpMode::Long ? "long" : "explicit");
}

/// Default 28 GHz / 120 kHz-spacing scenario: two 5 dBsm targets at 732.4 m
/// and 976.5 m, 1024-QAM, normal CP.
ScenarioConfig default_scenario();

/// Parses the JSON scenario schema: carrier_hz, subcarrier_spacing_hz,
/// n_subcarriers, n_symbols, cp ("normal" | "long" | {"samples": k} |
/// {"duration_s": x}), tx_gain_dbi, rx_gain_dbi, noise_figure_db,
/// temperature_k, constellation, targets [{range_m, velocity_mps,
/// rcs_dbsm}], seed. Missing keys fall back to the default scenario.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig scenario_from_json_text(const std::string& text);

std::string scenario_to_json_text(const ScenarioConfig& cfg);

} // namespace isac
