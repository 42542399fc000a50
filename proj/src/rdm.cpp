#include "isac/rdm.hpp"

#include "isac/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

namespace {

Rdm rdm_impl(const CMatrix& y, const SymbolGrid& s, const SystemParams& p, FilterKind filter) {
    const int n = p.n_subcarriers;
    const int m_count = p.n_symbols;
    if (y.rows() != n || y.cols() != m_count || s.rows() != n || s.cols() != m_count)
        throw std::invalid_argument("echo/symbol grid dimensions do not match params");

    Rdm out;
    out.filter = filter;
    out.values = CMatrix(n, m_count);
    CMatrix& chi = out.values;
    for (int m = 0; m < m_count; ++m) {
        cplx* col = chi.col(m);
        const cplx* yc = y.col(m);
        const cplx* sc = s.col(m);
        if (filter == FilterKind::Reciprocal)
            for (int k = 0; k < n; ++k) col[k] = yc[k] / sc[k];
        else
            for (int k = 0; k < n; ++k) col[k] = yc[k] * std::conj(sc[k]);
        fft(col, n, /*inverse=*/true); // subcarriers -> delay axis
    }
    std::vector<cplx> row(m_count);
    for (int l = 0; l < n; ++l) {
        for (int m = 0; m < m_count; ++m) row[m] = chi(l, m);
        fft(row, /*inverse=*/false); // symbols -> Doppler axis
        for (int m = 0; m < m_count; ++m) chi(l, m) = row[m];
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n) * m_count);
    for (auto& v : chi.data()) v *= scale;
    return out;
}

} // namespace

Rdm rdm_rf(const CMatrix& y, const SymbolGrid& s, const SystemParams& p) {
    return rdm_impl(y, s, p, FilterKind::Reciprocal);
}

Rdm rdm_mf(const CMatrix& y, const SymbolGrid& s, const SystemParams& p) {
    return rdm_impl(y, s, p, FilterKind::Matched);
}

void set_mainlobe(Rdm& rdm, const std::vector<GridTarget>& targets) {
    rdm.mainlobe_bins.clear();
    for (const auto& t : targets) rdm.mainlobe_bins.emplace_back(t.l, t.nu);
}

cplx dirichlet(int n, double x) {
    const cplx phase = std::polar(1.0, kPi * (n - 1) * x / n);
    const double r = std::remainder(x, static_cast<double>(n));
    if (std::abs(r) < 1e-9) return static_cast<double>(n) * phase;
    return std::sin(kPi * x) / std::sin(kPi * x / n) * phase;
}

SidelobeStats sidelobe_stats(const Rdm& rdm) {
    const int n = rdm.values.rows();
    const int m_count = rdm.values.cols();
    std::vector<char> is_main(static_cast<std::size_t>(n) * m_count, 0);
    for (const auto& [l, nu] : rdm.mainlobe_bins)
        is_main[static_cast<std::size_t>(nu) * n + l] = 1;

    SidelobeStats st;
    const auto& data = rdm.values.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (is_main[i]) continue;
        const double pw = std::norm(data[i]);
        st.integrated_sidelobe += pw;
        if (pw > st.peak_sidelobe) st.peak_sidelobe = pw;
    }
    for (const auto& [l, nu] : rdm.mainlobe_bins)
        st.mainlobe[{l, nu}] = std::norm(rdm.values(l, nu));
    return st;
}

} // namespace isac
