#pragma once

#include "isac/constellation.hpp"
#include "isac/scenario.hpp"

#include <map>
#include <utility>

namespace isac {

enum class FilterKind { Reciprocal, Matched };

inline const char* filter_name(FilterKind f) {
    return f == FilterKind::Reciprocal ? "rf" : "mf";
}

/// N x M complex range-Doppler map, rows = delay bins l, cols = Doppler bins
/// nu. mainlobe_bins lists the on-grid target bins; the sidelobe region is
/// the rest of the grid.
struct Rdm {
    CMatrix values;
    FilterKind filter = FilterKind::Reciprocal;
    std::vector<std::pair<int, int>> mainlobe_bins;
};

/// chi(l, nu) = (1/sqrt(MN)) sum_{n,m} (y/s) e^{+j2pi nl/N} e^{-j2pi m nu/M}.
/// Computed as an inverse DFT over subcarriers then a forward DFT over
/// symbols.
Rdm rdm_rf(const CMatrix& y, const SymbolGrid& s, const SystemParams& p);

/// Matched-filter variant: multiply by conj(s) instead of dividing by s.
Rdm rdm_mf(const CMatrix& y, const SymbolGrid& s, const SystemParams& p);

/// Marks the target bins as the mainlobe set.
void set_mainlobe(Rdm& rdm, const std::vector<GridTarget>& targets);

/// D_N(x) = sin(pi x)/sin(pi x/N) e^{j pi (N-1) x/N}, with the removable
/// singularity at x = 0 (mod N) evaluated as N e^{j pi (N-1) x/N}.
cplx dirichlet(int n, double x);

struct SidelobeStats {
    double peak_sidelobe = 0.0;       // max |chi|^2 over the sidelobe region
    double integrated_sidelobe = 0.0; // sum of |chi|^2 over the sidelobe region
    std::map<std::pair<int, int>, double> mainlobe; // (l, nu) -> |chi|^2
};

/// An empty mainlobe set makes the whole grid the sidelobe region
/// (noise-only scenarios).
SidelobeStats sidelobe_stats(const Rdm& rdm);

} // namespace isac
