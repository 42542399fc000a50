#include "isac/channel.hpp"

#include "isac/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

namespace {

SymbolGrid extended_grid(const SymbolGrid& grid, const std::vector<cplx>& predecessor, int n) {
    if (grid.rows() != n) throw std::invalid_argument("symbol grid row count does not match N");
    if (!predecessor.empty() && static_cast<int>(predecessor.size()) != n)
        throw std::invalid_argument("predecessor column must have N entries");
    SymbolGrid ext(n, grid.cols() + 1);
    for (int k = 0; k < n; ++k)
        ext(k, 0) = predecessor.empty() ? cplx(0.0, 0.0) : predecessor[k];
    for (int m = 0; m < grid.cols(); ++m)
        for (int k = 0; k < n; ++k) ext(k, m + 1) = grid(k, m);
    return ext;
}

void add_cscg(std::vector<cplx>& buf, double sigma2, std::uint64_t seed) {
    auto eng = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));
    for (auto& v : buf) v += cplx(gauss(eng), gauss(eng));
}

cplx unit_phasor(double turns) {
    const double ang = 2.0 * kPi * turns;
    return {std::cos(ang), std::sin(ang)};
}

} // namespace

TimeSignal echo_time_domain(const SymbolGrid& grid, const std::vector<cplx>& predecessor,
                            const std::vector<GridTarget>& targets, const SystemParams& p,
                            bool noise_on, std::uint64_t noise_seed) {
    const int n = p.n_subcarriers;
    const int m_frame = grid.cols();
    const int ns = p.samples_per_symbol();

    const TimeSignal tx = modulate(extended_grid(grid, predecessor, n), p);
    const std::size_t len = tx.samples.size();

    TimeSignal echo;
    echo.samples.assign(len, cplx(0.0, 0.0));
    echo.start_index = -static_cast<long>(ns); // warm-up symbol precedes the frame

    for (const auto& t : targets) {
        // Doppler phase is constant over each transmit symbol's samples.
        std::vector<cplx> doppler(m_frame + 1);
        for (int m_ext = 0; m_ext <= m_frame; ++m_ext)
            doppler[m_ext] = unit_phasor(static_cast<double>(m_ext - 1) * t.nu / m_frame);
        for (std::size_t i = t.l; i < len; ++i) {
            const std::size_t j = i - t.l;
            echo.samples[i] += t.alpha * tx.samples[j] * doppler[j / ns];
        }
    }
    if (noise_on) add_cscg(echo.samples, noise_power_w(p), noise_seed);
    return echo;
}

EchoGrid echo_frequency_domain(const SymbolGrid& grid, const std::vector<cplx>& predecessor,
                               const std::vector<GridTarget>& targets, const SystemParams& p,
                               bool noise_on, std::uint64_t noise_seed) {
    const int n = p.n_subcarriers;
    const int m_count = grid.cols();
    if (grid.rows() != n) throw std::invalid_argument("symbol grid row count does not match N");
    if (!predecessor.empty() && static_cast<int>(predecessor.size()) != n)
        throw std::invalid_argument("predecessor column must have N entries");

    EchoGrid out;
    out.has_components = true;
    out.y = CMatrix(n, m_count);
    out.y_free = CMatrix(n, m_count);
    out.y_isi = CMatrix(n, m_count);
    out.y_ici = CMatrix(n, m_count);
    out.noise = CMatrix(n, m_count);

    std::vector<cplx> prev(n, cplx(0.0, 0.0));
    if (!predecessor.empty()) prev = predecessor;

    std::vector<cplx> delay_phase(n), isi_phase(n), ratio(n);
    for (const auto& t : targets) {
        for (int k = 0; k < n; ++k) {
            delay_phase[k] = unit_phasor(-static_cast<double>(k) * t.l / n);
            isi_phase[k] = unit_phasor(static_cast<double>(k) * (p.n_cp - t.l) / n);
        }
        // free component, all targets
        for (int m = 0; m < m_count; ++m) {
            const cplx dop = unit_phasor(static_cast<double>(m) * t.nu / m_count);
            for (int k = 0; k < n; ++k)
                out.y_free(k, m) += t.alpha_tilde * grid(k, m) * delay_phase[k] * dop;
        }
        if (!t.beyond_cp) continue;

        const int overlap = t.l - p.n_cp; // samples of the previous symbol in the window
        // geometric-ratio kernel (1 - w^{d k}) / (1 - w^d), d = n' - n != 0 mod N
        ratio[0] = cplx(0.0, 0.0);
        for (int d = 1; d < n; ++d) {
            const cplx num = 1.0 - unit_phasor(static_cast<double>(d) * overlap / n);
            const cplx den = 1.0 - unit_phasor(static_cast<double>(d) / n);
            ratio[d] = num / den;
        }
        const cplx coef = t.alpha / static_cast<double>(n);
        for (int m = 0; m < m_count; ++m) {
            const cplx dop_m = unit_phasor(static_cast<double>(m) * t.nu / m_count);
            const cplx dop_prev = unit_phasor(static_cast<double>(m - 1) * t.nu / m_count);
            const cplx* cur = grid.col(m);
            const cplx* pre = (m == 0) ? prev.data() : grid.col(m - 1);
            for (int k = 0; k < n; ++k) {
                cplx ici(0.0, 0.0), isi(0.0, 0.0);
                for (int np = 0; np < n; ++np) {
                    if (np == k) continue;
                    const cplx& r = ratio[(np - k + n) % n];
                    ici += cur[np] * delay_phase[np] * r;
                    isi += pre[np] * isi_phase[np] * r;
                }
                isi += static_cast<double>(overlap) * pre[k] * isi_phase[k];
                out.y_ici(k, m) += coef * dop_m * ici;
                out.y_isi(k, m) += coef * dop_prev * isi;
            }
        }
    }

    if (noise_on) add_cscg(out.noise.data(), noise_power_w(p), noise_seed);
    for (std::size_t i = 0; i < out.y.size(); ++i)
        out.y.data()[i] = out.y_free.data()[i] + out.y_isi.data()[i] - out.y_ici.data()[i] +
                          out.noise.data()[i];
    return out;
}

std::pair<double, double> interference_powers(const std::vector<GridTarget>& targets) {
    double p_isi = 0.0, p_ici = 0.0;
    for (const auto& t : targets) {
        if (!t.beyond_cp) continue;
        const double a2 = std::norm(t.alpha);
        p_isi += t.rho * a2;
        p_ici += t.rho * (1.0 - t.rho) * a2;
    }
    return {p_isi, p_ici};
}

double sigma_in(const std::vector<GridTarget>& targets, const SystemParams& p) {
    const auto [p_isi, p_ici] = interference_powers(targets);
    return p_isi + p_ici + noise_power_w(p);
}

} // namespace isac
