#include "isac/waveform.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace isac;

namespace {

SystemParams small_params(int n, int m, int n_cp) {
    SystemParams p;
    p.n_subcarriers = n;
    p.n_symbols = m;
    p.n_cp = n_cp;
    return p;
}

// Direct evaluation of the transmit sum: x[i] = (1/sqrt(N)) sum_n s_{n,m}
// e^{j2pi n (i - N_cp - m N_s)/N} on symbol m's support.
std::vector<cplx> modulate_bruteforce(const SymbolGrid& grid, const SystemParams& p) {
    const int n = p.n_subcarriers;
    const int ns = p.samples_per_symbol();
    std::vector<cplx> x(static_cast<std::size_t>(grid.cols()) * ns, cplx(0.0, 0.0));
    for (int m = 0; m < grid.cols(); ++m) {
        for (int i = m * ns; i < (m + 1) * ns; ++i) {
            cplx acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const double ang = 2.0 * kPi * k * (i - p.n_cp - m * ns) / n;
                acc += grid(k, m) * cplx(std::cos(ang), std::sin(ang));
            }
            x[i] = acc / std::sqrt(static_cast<double>(n));
        }
    }
    return x;
}

} // namespace

TEST_SUITE_BEGIN("waveform");

TEST_CASE("DC tone with CP") {
    const SystemParams p = small_params(4, 1, 1);
    SymbolGrid grid(4, 1);
    grid(0, 0) = cplx(1.0, 0.0);
    const TimeSignal x = modulate(grid, p);
    REQUIRE(x.samples.size() == 5);
    for (const auto& s : x.samples) {
        CHECK(s.real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(s.imag()) < 1e-15);
    }
}

TEST_CASE("modulate matches the direct transmit sum") {
    const SystemParams p = small_params(8, 3, 2);
    const Constellation qpsk = constellation_from_token("qpsk");
    const SymbolGrid grid = draw_symbol_grid(qpsk, 8, 3, 19);
    const TimeSignal fast = modulate(grid, p);
    const std::vector<cplx> direct = modulate_bruteforce(grid, p);
    REQUIRE(fast.samples.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
        CHECK(std::abs(fast.samples[i] - direct[i]) < 1e-12);
}

TEST_CASE("per-symbol energy is preserved") {
    const SystemParams p = small_params(16, 4, 4);
    const SymbolGrid grid = draw_symbol_grid(constellation_from_token("qam64"), 16, 4, 5);
    const TimeSignal x = modulate(grid, p);
    const int ns = p.samples_per_symbol();
    for (int m = 0; m < 4; ++m) {
        double body_energy = 0.0, grid_energy = 0.0;
        for (int k = 0; k < 16; ++k) {
            body_energy += std::norm(x.samples[m * ns + p.n_cp + k]);
            grid_energy += std::norm(grid(k, m));
        }
        CHECK(body_energy == doctest::Approx(grid_energy).epsilon(1e-12));
    }
}

TEST_CASE("modulate/demodulate round trip") {
    const SystemParams p = small_params(256, 4, 18);
    const SymbolGrid grid = draw_symbol_grid(constellation_from_token("qam1024"), 256, 4, 77);
    const SymbolGrid back = demodulate(modulate(grid, p), p);
    double max_err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        max_err = std::max(max_err, std::abs(grid.data()[i] - back.data()[i]));
    CHECK(max_err < 1e-10);
}

TEST_CASE("integer delay within the CP is a pure per-subcarrier phase ramp") {
    const SystemParams p = small_params(32, 3, 8);
    const SymbolGrid grid = draw_symbol_grid(constellation_from_token("qam16"), 32, 3, 13);
    const TimeSignal x = modulate(grid, p);
    const int delay = 5;

    TimeSignal shifted;
    shifted.start_index = 0;
    shifted.samples.assign(x.samples.size() + delay, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < x.samples.size(); ++i) shifted.samples[i + delay] = x.samples[i];

    const SymbolGrid y = demodulate(shifted, p);
    for (int m = 0; m < 3; ++m) {
        for (int k = 0; k < 32; ++k) {
            const cplx expect =
                grid(k, m) * std::polar(1.0, -2.0 * kPi * k * delay / 32.0);
            CHECK(std::abs(y(k, m) - expect) < 1e-10);
        }
    }
}

TEST_CASE("demodulation preserves noise variance") {
    SystemParams p = small_params(256, 400, 18);
    std::mt19937_64 eng(99);
    const double sigma2 = 2.5;
    std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));
    TimeSignal noise;
    noise.start_index = 0;
    noise.samples.resize(static_cast<std::size_t>(p.n_symbols) * p.samples_per_symbol());
    for (auto& s : noise.samples) s = cplx(gauss(eng), gauss(eng));

    const SymbolGrid y = demodulate(noise, p);
    double var = 0.0;
    for (const auto& v : y.data()) var += std::norm(v);
    var /= static_cast<double>(y.size()); // > 1e5 bins
    CHECK(std::abs(var - sigma2) / sigma2 < 0.03);
}

TEST_SUITE_END();
