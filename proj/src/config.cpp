#include "isac/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isac {

using nlohmann::json;

int resolve_cp_samples(CpMode mode, int explicit_samples, const SystemParams& p) {
    switch (mode) {
    case CpMode::Normal:
        return std::min(kNormalCpSamples, p.n_subcarriers);
    case CpMode::Long:
        return p.n_subcarriers;
    case CpMode::Explicit:
    default:
        return explicit_samples;
    }
}

void apply_cp_mode(ScenarioConfig& cfg, CpMode mode) {
    cfg.cp_mode = mode;
    cfg.params.n_cp = resolve_cp_samples(mode, cfg.params.n_cp, cfg.params);
    cfg.params.validate();
}

ScenarioConfig default_scenario() {
    ScenarioConfig cfg;
    cfg.params.carrier_hz = 28e9;
    cfg.params.subcarrier_spacing_hz = 120e3;
    cfg.params.n_subcarriers = 256;
    cfg.params.n_symbols = 128;
    cfg.params.tx_gain = db_to_linear(25.8);
    cfg.params.rx_gain = db_to_linear(25.8);
    cfg.params.noise_figure = db_to_linear(3.0);
    cfg.params.temperature_k = 290.0;
    cfg.constellation_token = "qam1024";
    cfg.constellation = constellation_from_token(cfg.constellation_token);
    cfg.targets = {{732.4, 0.0, db_to_linear(5.0), 0.0}, {976.5, 0.0, db_to_linear(5.0), 0.0}};
    cfg.seed = 1;
    apply_cp_mode(cfg, CpMode::Normal);
    return cfg;
}

ScenarioConfig scenario_from_json_text(const std::string& text) {
    json j = json::parse(text);
    ScenarioConfig cfg = default_scenario();
    SystemParams& p = cfg.params;
    if (j.contains("carrier_hz")) p.carrier_hz = j["carrier_hz"].get<double>();
    if (j.contains("subcarrier_spacing_hz"))
        p.subcarrier_spacing_hz = j["subcarrier_spacing_hz"].get<double>();
    if (j.contains("n_subcarriers")) p.n_subcarriers = j["n_subcarriers"].get<int>();
    if (j.contains("n_symbols")) p.n_symbols = j["n_symbols"].get<int>();
    if (j.contains("tx_gain_dbi")) p.tx_gain = db_to_linear(j["tx_gain_dbi"].get<double>());
    if (j.contains("rx_gain_dbi")) p.rx_gain = db_to_linear(j["rx_gain_dbi"].get<double>());
    if (j.contains("noise_figure_db"))
        p.noise_figure = db_to_linear(j["noise_figure_db"].get<double>());
    if (j.contains("temperature_k")) p.temperature_k = j["temperature_k"].get<double>();
    if (j.contains("c0_mps")) p.c0 = j["c0_mps"].get<double>();

    if (j.contains("cp")) {
        const json& cp = j["cp"];
        if (cp.is_string()) {
            const std::string mode = cp.get<std::string>();
            if (mode == "normal")
                cfg.cp_mode = CpMode::Normal;
            else if (mode == "long")
                cfg.cp_mode = CpMode::Long;
            else
                throw std::invalid_argument("cp mode must be \"normal\" or \"long\", got " + mode);
        } else if (cp.is_object() && cp.contains("samples")) {
            cfg.cp_mode = CpMode::Explicit;
            p.n_cp = cp["samples"].get<int>();
        } else if (cp.is_object() && cp.contains("duration_s")) {
            cfg.cp_mode = CpMode::Explicit;
            p.n_cp = static_cast<int>(
                std::lround(cp["duration_s"].get<double>() / p.sample_interval_s()));
        } else {
            throw std::invalid_argument("cp must be \"normal\", \"long\", {samples} or {duration_s}");
        }
    }
    if (j.contains("constellation")) {
        cfg.constellation_token = j["constellation"].get<std::string>();
        cfg.constellation = constellation_from_token(cfg.constellation_token);
    }
    if (j.contains("targets")) {
        cfg.targets.clear();
        for (const auto& tj : j["targets"]) {
            Target t;
            t.range_m = tj.at("range_m").get<double>();
            if (tj.contains("velocity_mps")) t.velocity_mps = tj["velocity_mps"].get<double>();
            if (tj.contains("rcs_dbsm"))
                t.rcs_m2 = db_to_linear(tj["rcs_dbsm"].get<double>());
            else if (tj.contains("rcs_m2"))
                t.rcs_m2 = tj["rcs_m2"].get<double>();
            if (tj.contains("phase_rad")) t.phase_rad = tj["phase_rad"].get<double>();
            cfg.targets.push_back(t);
        }
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("warmup_symbol")) cfg.warmup_symbol = j["warmup_symbol"].get<bool>();

    apply_cp_mode(cfg, cfg.cp_mode);
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

std::string scenario_to_json_text(const ScenarioConfig& cfg) {
    json j;
    j["carrier_hz"] = cfg.params.carrier_hz;
    j["subcarrier_spacing_hz"] = cfg.params.subcarrier_spacing_hz;
    j["n_subcarriers"] = cfg.params.n_subcarriers;
    j["n_symbols"] = cfg.params.n_symbols;
    if (cfg.cp_mode == CpMode::Explicit)
        j["cp"] = json{{"samples", cfg.params.n_cp}};
    else
        j["cp"] = cfg.cp_mode == CpMode::Normal ? "normal" : "long";
    j["tx_gain_dbi"] = linear_to_db(cfg.params.tx_gain);
    j["rx_gain_dbi"] = linear_to_db(cfg.params.rx_gain);
    j["noise_figure_db"] = linear_to_db(cfg.params.noise_figure);
    j["temperature_k"] = cfg.params.temperature_k;
    j["constellation"] = cfg.constellation_token;
    j["seed"] = cfg.seed;
    j["warmup_symbol"] = cfg.warmup_symbol;
    json targets = json::array();
    for (const auto& t : cfg.targets) {
        json tj;
        tj["range_m"] = t.range_m;
        tj["velocity_mps"] = t.velocity_mps;
        tj["rcs_dbsm"] = linear_to_db(t.rcs_m2);
        if (t.phase_rad != 0.0) tj["phase_rad"] = t.phase_rad;
        targets.push_back(tj);
    }
    j["targets"] = targets;
    return j.dump(2);
}

} // namespace isac
