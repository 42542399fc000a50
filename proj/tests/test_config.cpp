#include "isac/config.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace isac;

TEST_SUITE_BEGIN("config");

TEST_CASE("default scenario") {
    const ScenarioConfig cfg = default_scenario();
    CHECK(cfg.params.n_subcarriers == 256);
    CHECK(cfg.params.n_symbols == 128);
    CHECK(cfg.params.n_cp == kNormalCpSamples);
    CHECK(cfg.cp_mode == CpMode::Normal);
    CHECK(cfg.constellation_token == "qam1024");
    CHECK(cfg.constellation.points.size() == 1024);
    REQUIRE(cfg.targets.size() == 2);
    CHECK(cfg.targets[0].range_m == doctest::Approx(732.4));
    CHECK(cfg.targets[1].range_m == doctest::Approx(976.5));
    CHECK(cfg.targets[0].rcs_m2 == doctest::Approx(db_to_linear(5.0)));
    CHECK(cfg.seed == 1);
    CHECK(cfg.warmup_symbol);
}

TEST_CASE("cp resolution") {
    SystemParams p;
    p.n_subcarriers = 256;
    CHECK(resolve_cp_samples(CpMode::Normal, 99, p) == 18);
    CHECK(resolve_cp_samples(CpMode::Long, 99, p) == 256);
    CHECK(resolve_cp_samples(CpMode::Explicit, 99, p) == 99);
    p.n_subcarriers = 8; // normal CP clamps to the symbol length
    CHECK(resolve_cp_samples(CpMode::Normal, 99, p) == 8);

    ScenarioConfig cfg = default_scenario();
    apply_cp_mode(cfg, CpMode::Long);
    CHECK(cfg.params.n_cp == 256);
    CHECK(cfg.cp_mode == CpMode::Long);
}

TEST_CASE("json parsing") {
    const char* text = R"({
        "carrier_hz": 24e9,
        "subcarrier_spacing_hz": 60e3,
        "n_subcarriers": 64,
        "n_symbols": 32,
        "cp": {"samples": 9},
        "tx_gain_dbi": 20.0,
        "rx_gain_dbi": 10.0,
        "noise_figure_db": 6.0,
        "temperature_k": 300.0,
        "constellation": "qam16",
        "targets": [
            {"range_m": 120.0, "velocity_mps": 15.0, "rcs_dbsm": 10.0},
            {"range_m": 400.0, "rcs_m2": 2.5, "phase_rad": 0.7}
        ],
        "seed": 42,
        "warmup_symbol": false
    })";
    const ScenarioConfig cfg = scenario_from_json_text(text);
    CHECK(cfg.params.carrier_hz == 24e9);
    CHECK(cfg.params.subcarrier_spacing_hz == 60e3);
    CHECK(cfg.params.n_subcarriers == 64);
    CHECK(cfg.params.n_symbols == 32);
    CHECK(cfg.params.n_cp == 9);
    CHECK(cfg.cp_mode == CpMode::Explicit);
    CHECK(cfg.params.tx_gain == doctest::Approx(100.0));
    CHECK(cfg.params.rx_gain == doctest::Approx(10.0));
    CHECK(cfg.params.noise_figure == doctest::Approx(db_to_linear(6.0)));
    CHECK(cfg.params.temperature_k == 300.0);
    CHECK(cfg.constellation_token == "qam16");
    REQUIRE(cfg.targets.size() == 2);
    CHECK(cfg.targets[0].velocity_mps == 15.0);
    CHECK(cfg.targets[0].rcs_m2 == doctest::Approx(10.0)); // 10 dBsm
    CHECK(cfg.targets[1].rcs_m2 == 2.5);
    CHECK(cfg.targets[1].velocity_mps == 0.0);
    CHECK(cfg.targets[1].phase_rad == doctest::Approx(0.7));
    CHECK(cfg.seed == 42);
    CHECK_FALSE(cfg.warmup_symbol);
}

TEST_CASE("cp duration spec resolves in samples") {
    // 0.586 us at 30.72 MHz -> 18 samples
    const ScenarioConfig cfg =
        scenario_from_json_text(R"({"cp": {"duration_s": 0.586e-6}})");
    CHECK(cfg.cp_mode == CpMode::Explicit);
    CHECK(cfg.params.n_cp == 18);
}

TEST_CASE("missing keys keep the defaults") {
    const ScenarioConfig cfg = scenario_from_json_text(R"({"constellation": "qpsk"})");
    CHECK(cfg.constellation_token == "qpsk");
    CHECK(cfg.params.carrier_hz == 28e9);
    CHECK(cfg.params.n_cp == kNormalCpSamples);
    CHECK(cfg.targets.size() == 2);
}

TEST_CASE("invalid configs are rejected") {
    CHECK_THROWS(scenario_from_json_text("not json"));
    CHECK_THROWS_AS(scenario_from_json_text(R"({"cp": "medium"})"), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_json_text(R"({"cp": {"length": 3}})"), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_json_text(R"({"constellation": "qam12"})"),
                    std::invalid_argument);
    CHECK_THROWS(scenario_from_json_text(R"({"targets": [{"velocity_mps": 3.0}]})"));
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), std::runtime_error);
}

TEST_CASE("serialization round trip") {
    ScenarioConfig cfg = default_scenario();
    cfg.constellation_token = "qam64";
    cfg.constellation = constellation_from_token(cfg.constellation_token);
    cfg.seed = 777;
    cfg.targets[0].velocity_mps = -12.5;
    apply_cp_mode(cfg, CpMode::Long);

    const ScenarioConfig back = scenario_from_json_text(scenario_to_json_text(cfg));
    CHECK(back.params.carrier_hz == doctest::Approx(cfg.params.carrier_hz));
    CHECK(back.params.n_subcarriers == cfg.params.n_subcarriers);
    CHECK(back.params.n_cp == cfg.params.n_cp);
    CHECK(back.cp_mode == CpMode::Long);
    CHECK(back.params.tx_gain == doctest::Approx(cfg.params.tx_gain));
    CHECK(back.params.noise_figure == doctest::Approx(cfg.params.noise_figure));
    CHECK(back.constellation_token == "qam64");
    CHECK(back.seed == 777);
    REQUIRE(back.targets.size() == 2);
    CHECK(back.targets[0].velocity_mps == doctest::Approx(-12.5));
    CHECK(back.targets[0].rcs_m2 == doctest::Approx(cfg.targets[0].rcs_m2));
}

TEST_CASE("load_scenario reads a file") {
    const std::string path = "test_config_scenario.json";
    {
        std::ofstream out(path);
        out << R"({"n_subcarriers": 32, "n_symbols": 8, "cp": "long"})";
    }
    const ScenarioConfig cfg = load_scenario(path);
    std::remove(path.c_str());
    CHECK(cfg.params.n_subcarriers == 32);
    CHECK(cfg.params.n_cp == 32);
    CHECK(cfg.cp_mode == CpMode::Long);
}

TEST_SUITE_END();
