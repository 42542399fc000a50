#pragma once

#include "isac/rdm.hpp"

namespace isac {

struct Estimate {
    int l = 0;
    int nu = 0;
    double range_m = 0.0;
    double velocity_mps = 0.0;
};

/// The `count` strongest |chi|^2 bins, ties broken by lowest (l, nu), with
/// bin indices converted to physical units. Throws if count is outside
/// [1, MN].
std::vector<Estimate> detect_peaks(const Rdm& rdm, const SystemParams& p, int count);

struct RmseResult {
    double range_rmse_m = 0.0;
    double velocity_rmse_mps = 0.0;
};

/// Root mean squared error across trials, per dimension. Throws on empty or
/// mismatched inputs.
RmseResult rmse(const std::vector<Estimate>& truth, const std::vector<Estimate>& estimates);

} // namespace isac
