#include "isac/waveform.hpp"

#include "isac/fft.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace isac {

TimeSignal modulate(const SymbolGrid& grid, const SystemParams& p) {
    const int n = p.n_subcarriers;
    if (grid.rows() != n)
        throw std::invalid_argument("symbol grid row count does not match N");
    const int n_cp = p.n_cp;
    const int ns = n + n_cp;
    const int m_count = grid.cols();

    TimeSignal out;
    out.samples.resize(static_cast<std::size_t>(m_count) * ns);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cplx> body(n);
    for (int m = 0; m < m_count; ++m) {
        const cplx* col = grid.col(m);
        for (int k = 0; k < n; ++k) body[k] = col[k];
        fft(body, /*inverse=*/true);
        cplx* sym = out.samples.data() + static_cast<std::size_t>(m) * ns;
        for (int k = 0; k < n_cp; ++k) sym[k] = body[n - n_cp + k] * scale;
        for (int k = 0; k < n; ++k) sym[n_cp + k] = body[k] * scale;
    }
    return out;
}

SymbolGrid demodulate(const TimeSignal& sig, const SystemParams& p) {
    const int n = p.n_subcarriers;
    const int ns = p.samples_per_symbol();
    const int m_count = p.n_symbols;

    SymbolGrid grid(n, m_count);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < m_count; ++m) {
        const long global0 = static_cast<long>(m) * ns + p.n_cp;
        const long local0 = global0 - sig.start_index;
        if (local0 < 0 || local0 + n > static_cast<long>(sig.samples.size()))
            throw std::invalid_argument("time signal too short for all detection windows");
        cplx* col = grid.col(m);
        std::memcpy(col, sig.samples.data() + local0, sizeof(cplx) * n);
        fft(col, n, /*inverse=*/false);
        for (int k = 0; k < n; ++k) col[k] *= scale;
    }
    return grid;
}

} // namespace isac
