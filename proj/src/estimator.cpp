#include "isac/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isac {

std::vector<Estimate> detect_peaks(const Rdm& rdm, const SystemParams& p, int count) {
    const int n = rdm.values.rows();
    const int m_count = rdm.values.cols();
    const long mn = static_cast<long>(n) * m_count;
    if (count < 1 || count > mn)
        throw std::invalid_argument("peak count must be in [1, MN]");

    struct Bin {
        double power;
        int l, nu;
    };
    std::vector<Bin> bins;
    bins.reserve(mn);
    for (int nu = 0; nu < m_count; ++nu)
        for (int l = 0; l < n; ++l)
            bins.push_back({std::norm(rdm.values(l, nu)), l, nu});
    auto stronger = [](const Bin& a, const Bin& b) {
        if (a.power != b.power) return a.power > b.power;
        if (a.l != b.l) return a.l < b.l;
        return a.nu < b.nu;
    };
    std::partial_sort(bins.begin(), bins.begin() + count, bins.end(), stronger);

    std::vector<Estimate> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Estimate e;
        e.l = bins[i].l;
        e.nu = bins[i].nu;
        e.range_m = e.l * p.range_bin_m();
        e.velocity_mps = e.nu * p.velocity_bin_mps();
        out.push_back(e);
    }
    return out;
}

RmseResult rmse(const std::vector<Estimate>& truth, const std::vector<Estimate>& estimates) {
    if (truth.empty() || truth.size() != estimates.size())
        throw std::invalid_argument("rmse requires nonempty, matched trial lists");
    double r_acc = 0.0, v_acc = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double dr = estimates[i].range_m - truth[i].range_m;
        const double dv = estimates[i].velocity_mps - truth[i].velocity_mps;
        r_acc += dr * dr;
        v_acc += dv * dv;
    }
    const double n = static_cast<double>(truth.size());
    return {std::sqrt(r_acc / n), std::sqrt(v_acc / n)};
}

} // namespace isac
