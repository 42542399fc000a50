#pragma once

#include "isac/channel.hpp"
#include "isac/rdm.hpp"

namespace isac {

/// Closed-form second-order RDM moments: per-target mainlobe power and the
/// bin-invariant sidelobe floor, in linear power.
struct MomentPrediction {
    FilterKind filter = FilterKind::Reciprocal;
    std::vector<double> mainlobe; // one entry per grid target, same order
    double sidelobe_floor = 0.0;
    double xi_s = 0.0;
    double mu4 = 0.0;
    double sigma_in = 0.0;
};

/// RF: floor = xi_s sigma^2_IN, mainlobe_q = MN |alpha_tilde_q|^2 + floor.
MomentPrediction predict_moment_rf(const std::vector<GridTarget>& targets,
                                   const SystemParams& p, const Constellation& c);

/// MF: floor = (mu4 - 1) sum_q |alpha_tilde_q|^2 + sigma^2_IN,
/// mainlobe_q = MN |alpha_tilde_q|^2 + floor.
MomentPrediction predict_moment_mf(const std::vector<GridTarget>& targets,
                                   const SystemParams& p, const Constellation& c);

/// H_k = sum_{q=1}^{k} 1/q, summed smallest terms first. Throws for k < 1.
double harmonic_number(long k);

/// Expected sidelobe order statistics and per-target PSLR/ISLR ratios.
/// expected_peak_sl = H_{MN-Q} * floor, expected_int_sl = (MN-Q) * floor,
/// pslr_q = expected_peak_sl / mainlobe_q, islr_q = expected_int_sl / mainlobe_q.
struct SidelobeMetrics {
    std::vector<double> pslr;
    std::vector<double> islr;
    double expected_peak_sl = 0.0;
    double expected_int_sl = 0.0;
    double harmonic = 0.0;
};

SidelobeMetrics predict_sidelobe_metrics(const std::vector<GridTarget>& targets,
                                         const SystemParams& p, const Constellation& c,
                                         FilterKind filter);

} // namespace isac
