#include "isac/constellation.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace isac;

TEST_SUITE_BEGIN("constellation");

TEST_CASE("qpsk points lie on the unit circle") {
    const Constellation c = make_constellation(ConstellationKind::Psk, 4);
    REQUIRE(c.points.size() == 4);
    for (const auto& p : c.points) CHECK(std::abs(std::abs(p) - 1.0) < 1e-14);
}

TEST_CASE("16-QAM power levels come from the (+-1,+-3) grid") {
    // oracle: enumerate the 16 points of the (+-1,+-3)^2 grid, mean power 10
    const Constellation c = make_constellation(ConstellationKind::SquareQam, 16);
    REQUIRE(c.points.size() == 16);
    int n02 = 0, n10 = 0, n18 = 0;
    for (const auto& p : c.points) {
        const double pw = std::norm(p);
        if (std::abs(pw - 0.2) < 1e-12)
            ++n02;
        else if (std::abs(pw - 1.0) < 1e-12)
            ++n10;
        else if (std::abs(pw - 1.8) < 1e-12)
            ++n18;
    }
    CHECK(n02 == 4);
    CHECK(n10 == 8);
    CHECK(n18 == 4);
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(make_constellation(ConstellationKind::SquareQam, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_constellation(ConstellationKind::SquareQam, 32), std::invalid_argument);
    CHECK_THROWS_AS(make_constellation(ConstellationKind::Psk, 3), std::invalid_argument);
    CHECK_THROWS_AS(constellation_from_token("qam8"), std::invalid_argument);
    CHECK_THROWS_AS(constellation_from_token("apsk16"), std::invalid_argument);
}

TEST_CASE("unit average power, distinct points") {
    for (const char* tok : {"bpsk", "qpsk", "psk8", "qam16", "qam64", "qam256", "qam1024"}) {
        const Constellation c = constellation_from_token(tok);
        double mean_power = 0.0;
        for (const auto& p : c.points) mean_power += std::norm(p);
        mean_power /= c.points.size();
        CHECK(std::abs(mean_power - 1.0) < 1e-12);

        std::set<std::pair<double, double>> uniq;
        for (const auto& p : c.points) uniq.insert({p.real(), p.imag()});
        CHECK(uniq.size() == c.points.size());
    }
}

TEST_CASE("alphabet moments") {
    CHECK(xi_s(constellation_from_token("bpsk")) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mu4(constellation_from_token("psk16")) == doctest::Approx(1.0).epsilon(1e-12));
    // references from exact enumeration of the normalized (+-1,+-3,...) grids
    CHECK(xi_s(constellation_from_token("qam16")) == doctest::Approx(17.0 / 9.0).epsilon(1e-12));
    CHECK(std::abs(xi_s(constellation_from_token("qam256")) - 3.4371300) < 1e-6);
    CHECK(std::abs(xi_s(constellation_from_token("qam1024")) - 4.1715597) < 1e-6);
    CHECK(mu4(constellation_from_token("qam16")) == doctest::Approx(1.32).epsilon(1e-12));
    CHECK(std::abs(mu4(constellation_from_token("qam256")) - 1.3952941) < 1e-6);
    CHECK(std::abs(mu4(constellation_from_token("qam1024")) - 1.3988270) < 1e-6);
}

TEST_CASE("moment inequalities hold for every supported alphabet") {
    for (const char* tok : {"bpsk", "qpsk", "psk8", "qam16", "qam64", "qam256", "qam1024"}) {
        const Constellation c = constellation_from_token(tok);
        CHECK(xi_s(c) >= 1.0 - 1e-12);
        CHECK(mu4(c) >= 1.0 - 1e-12);
    }
}

TEST_CASE("symbol draws are deterministic and alphabet members") {
    const Constellation qpsk = constellation_from_token("qpsk");
    const SymbolGrid a = draw_symbol_grid(qpsk, 2, 2, 7);
    const SymbolGrid b = draw_symbol_grid(qpsk, 2, 2, 7);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.data()[i] == b.data()[i]);

    const Constellation bpsk = constellation_from_token("bpsk");
    const SymbolGrid g = draw_symbol_grid(bpsk, 1, 1, 42);
    CHECK(std::abs(std::abs(g(0, 0).real()) - 1.0) < 1e-14);
    CHECK(std::abs(g(0, 0).imag()) < 1e-15);

    const Constellation qam = constellation_from_token("qam16");
    const SymbolGrid big = draw_symbol_grid(qam, 256, 128, 3);
    double mean_power = 0.0;
    int members = 0;
    for (const auto& s : big.data()) {
        mean_power += std::norm(s);
        members += std::any_of(qam.points.begin(), qam.points.end(),
                               [&](const cplx& p) { return std::abs(p - s) < 1e-12; });
    }
    mean_power /= big.size();
    CHECK(std::abs(mean_power - 1.0) < 0.02);
    CHECK(members == static_cast<int>(big.size()));
}

TEST_CASE("empirical moments converge to the alphabet values") {
    SymbolGrid constant(4, 4);
    for (auto& s : constant.data()) s = cplx(std::sqrt(0.5), std::sqrt(0.5));
    const auto [xi_c, mu_c] = empirical_moments(constant);
    CHECK(xi_c == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mu_c == doctest::Approx(1.0).epsilon(1e-12));

    for (const char* tok : {"qam16", "qam1024"}) {
        const Constellation c = constellation_from_token(tok);
        const SymbolGrid g = draw_symbol_grid(c, 1000, 1000, 11);
        const auto [xi_hat, mu4_hat] = empirical_moments(g);
        CHECK(std::abs(xi_hat - xi_s(c)) / xi_s(c) < 0.01);
        CHECK(std::abs(mu4_hat - mu4(c)) / mu4(c) < 0.01);
    }
}

TEST_SUITE_END();
