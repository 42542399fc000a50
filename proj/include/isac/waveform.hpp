#pragma once

#include "isac/constellation.hpp"
#include "isac/scenario.hpp"

namespace isac {

/// Baseband sample stream at interval T_sam. start_index is the global sample
/// index of the first entry; index 0 is the start of frame symbol 0's CP, so a
/// warm-up symbol transmitted before the frame occupies negative indices.
struct TimeSignal {
    std::vector<cplx> samples;
    long start_index = 0;
};

/// OFDM modulation: per symbol, the N-point inverse DFT of the column scaled
/// by 1/sqrt(N), cyclic-prefixed with its last N_cp samples. The grid may
/// carry any number of columns (channel code modulates a warm-up symbol too);
/// rows must equal N.
TimeSignal modulate(const SymbolGrid& grid, const SystemParams& p);

/// CP removal + per-symbol unitary DFT over the N samples of each detection
/// window [m N_s + N_cp, (m+1) N_s), indices window-local. Throws if the
/// signal does not cover all M windows.
SymbolGrid demodulate(const TimeSignal& sig, const SystemParams& p);

} // namespace isac
