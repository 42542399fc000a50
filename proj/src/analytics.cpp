#include "isac/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

namespace {

double grid_size(const SystemParams& p) {
    return static_cast<double>(p.n_subcarriers) * p.n_symbols;
}

} // namespace

MomentPrediction predict_moment_rf(const std::vector<GridTarget>& targets,
                                   const SystemParams& p, const Constellation& c) {
    MomentPrediction mp;
    mp.filter = FilterKind::Reciprocal;
    mp.xi_s = xi_s(c);
    mp.mu4 = mu4(c);
    mp.sigma_in = sigma_in(targets, p);
    mp.sidelobe_floor = mp.xi_s * mp.sigma_in;
    const double mn = grid_size(p);
    for (const auto& t : targets)
        mp.mainlobe.push_back(mn * std::norm(t.alpha_tilde) + mp.sidelobe_floor);
    return mp;
}

MomentPrediction predict_moment_mf(const std::vector<GridTarget>& targets,
                                   const SystemParams& p, const Constellation& c) {
    MomentPrediction mp;
    mp.filter = FilterKind::Matched;
    mp.xi_s = xi_s(c);
    mp.mu4 = mu4(c);
    mp.sigma_in = sigma_in(targets, p);
    double iti = 0.0;
    for (const auto& t : targets) iti += std::norm(t.alpha_tilde);
    mp.sidelobe_floor = (mp.mu4 - 1.0) * iti + mp.sigma_in;
    const double mn = grid_size(p);
    for (const auto& t : targets)
        mp.mainlobe.push_back(mn * std::norm(t.alpha_tilde) + mp.sidelobe_floor);
    return mp;
}

double harmonic_number(long k) {
    if (k < 1) throw std::invalid_argument("harmonic_number requires k >= 1");
    double acc = 0.0;
    for (long q = k; q >= 1; --q) acc += 1.0 / static_cast<double>(q);
    return acc;
}

SidelobeMetrics predict_sidelobe_metrics(const std::vector<GridTarget>& targets,
                                         const SystemParams& p, const Constellation& c,
                                         FilterKind filter) {
    const long mn = static_cast<long>(p.n_subcarriers) * p.n_symbols;
    const long q_count = static_cast<long>(targets.size());
    if (q_count >= mn) throw std::invalid_argument("target count must be below MN");

    const MomentPrediction mp = filter == FilterKind::Reciprocal
                                    ? predict_moment_rf(targets, p, c)
                                    : predict_moment_mf(targets, p, c);
    SidelobeMetrics sm;
    sm.harmonic = harmonic_number(mn - q_count);
    sm.expected_peak_sl = sm.harmonic * mp.sidelobe_floor;
    sm.expected_int_sl = static_cast<double>(mn - q_count) * mp.sidelobe_floor;
    for (double main : mp.mainlobe) {
        sm.pslr.push_back(sm.expected_peak_sl / main);
        sm.islr.push_back(sm.expected_int_sl / main);
    }
    return sm;
}

} // namespace isac
