#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace isac {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kBoltzmann = 1.380649e-23; // J/K
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Dense complex matrix, column-major. Rows index subcarriers (or delay bins),
/// columns index OFDM symbols (or Doppler bins).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(int r, int c) { return data_[static_cast<std::size_t>(c) * rows_ + r]; }
    const cplx& operator()(int r, int c) const { return data_[static_cast<std::size_t>(c) * rows_ + r]; }

    cplx* col(int c) { return data_.data() + static_cast<std::size_t>(c) * rows_; }
    const cplx* col(int c) const { return data_.data() + static_cast<std::size_t>(c) * rows_; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace isac
