#include "isac/constellation.hpp"

#include "isac/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

namespace {

bool is_pow2_int(int n) { return n > 0 && (n & (n - 1)) == 0; }

Constellation make_psk(int order) {
    if (order < 2 || !is_pow2_int(order))
        throw std::invalid_argument("PSK order must be a power of two >= 2, got " +
                                    std::to_string(order));
    Constellation c{ConstellationKind::Psk, order, {}};
    c.points.reserve(order);
    for (int k = 0; k < order; ++k) {
        const double ang = 2.0 * kPi * k / order;
        c.points.emplace_back(std::cos(ang), std::sin(ang));
    }
    return c;
}

Constellation make_square_qam(int order) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
    if (side * side != order || side % 2 != 0 || order < 4 || order > 1024)
        throw std::invalid_argument("square QAM order must be one of 4, 16, 64, 256, 1024, got " +
                                    std::to_string(order));
    Constellation c{ConstellationKind::SquareQam, order, {}};
    c.points.reserve(order);
    double power_sum = 0.0;
    for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) {
            const double re = 2 * a - side + 1;
            const double im = 2 * b - side + 1;
            c.points.emplace_back(re, im);
            power_sum += re * re + im * im;
        }
    }
    const double scale = 1.0 / std::sqrt(power_sum / order);
    for (auto& p : c.points) p *= scale;
    return c;
}

} // namespace

Constellation make_constellation(ConstellationKind kind, int order) {
    return kind == ConstellationKind::Psk ? make_psk(order) : make_square_qam(order);
}

Constellation constellation_from_token(const std::string& token) {
    if (token == "bpsk") return make_psk(2);
    if (token == "qpsk") return make_psk(4);
    if (token.rfind("psk", 0) == 0) return make_psk(std::stoi(token.substr(3)));
    if (token.rfind("qam", 0) == 0) return make_square_qam(std::stoi(token.substr(3)));
    throw std::invalid_argument("unknown constellation token: " + token);
}

std::string constellation_token(const Constellation& c) {
    if (c.kind == ConstellationKind::Psk) {
        if (c.order == 2) return "bpsk";
        if (c.order == 4) return "qpsk";
        return "psk" + std::to_string(c.order);
    }
    return "qam" + std::to_string(c.order);
}

double xi_s(const Constellation& c) {
    double acc = 0.0;
    for (const auto& p : c.points) acc += 1.0 / std::norm(p);
    return acc / c.points.size();
}

double mu4(const Constellation& c) {
    double acc = 0.0;
    for (const auto& p : c.points) {
        const double p2 = std::norm(p);
        acc += p2 * p2;
    }
    return acc / c.points.size();
}

SymbolGrid draw_symbol_grid(const Constellation& c, int n_subcarriers, int n_symbols,
                            std::uint64_t seed) {
    if (n_subcarriers < 1 || n_symbols < 1)
        throw std::invalid_argument("symbol grid dimensions must be >= 1");
    SymbolGrid grid(n_subcarriers, n_symbols);
    auto eng = make_engine(seed);
    std::uniform_int_distribution<int> pick(0, c.order - 1);
    for (auto& s : grid.data()) s = c.points[pick(eng)];
    return grid;
}

std::pair<double, double> empirical_moments(const SymbolGrid& grid) {
    if (grid.size() == 0) throw std::invalid_argument("empty symbol grid");
    double inv_sum = 0.0;
    double p4_sum = 0.0;
    for (const auto& s : grid.data()) {
        const double p2 = std::norm(s);
        inv_sum += 1.0 / p2;
        p4_sum += p2 * p2;
    }
    const double n = static_cast<double>(grid.size());
    return {inv_sum / n, p4_sum / n};
}

} // namespace isac
