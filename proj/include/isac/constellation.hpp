#pragma once

#include "isac/types.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace isac {

enum class ConstellationKind { Psk, SquareQam };

/// Unit-average-power symbol alphabet.
struct Constellation {
    ConstellationKind kind;
    int order = 0;
    std::vector<cplx> points;
};

/// N x M grid of data symbols, one column per OFDM symbol.
using SymbolGrid = CMatrix;

/// PSK: `order` equally spaced unit-circle points, order a power of two.
/// Square QAM: the (+-1, +-3, ...) grid scaled to unit mean power; order must
/// be one of 4, 16, 64, 256, 1024. Throws std::invalid_argument otherwise.
Constellation make_constellation(ConstellationKind kind, int order);

/// Accepts "bpsk", "qpsk", "psk<order>", "qam<order>".
Constellation constellation_from_token(const std::string& token);
std::string constellation_token(const Constellation& c);

/// Mean inverse symbol power E{1/|s|^2} over the alphabet.
double xi_s(const Constellation& c);

/// Fourth-order moment E{|s|^4} over the alphabet.
double mu4(const Constellation& c);

/// i.i.d. uniform draws from the alphabet; deterministic given the seed.
SymbolGrid draw_symbol_grid(const Constellation& c, int n_subcarriers, int n_symbols,
                            std::uint64_t seed);

/// Sample means of 1/|s|^2 and |s|^4.
std::pair<double, double> empirical_moments(const SymbolGrid& grid);

} // namespace isac
