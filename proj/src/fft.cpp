#include "isac/fft.hpp"

#include <cmath>

namespace isac {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(cplx* x, std::size_t n, bool inverse) {
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = x[i + k];
                cplx v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void dft_direct(cplx* x, std::size_t n, bool inverse) {
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double ang = sign * 2.0 * kPi * static_cast<double>(i * k % n) / static_cast<double>(n);
            acc += x[i] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    for (std::size_t k = 0; k < n; ++k) x[k] = out[k];
}

} // namespace

void fft(cplx* x, std::size_t n, bool inverse) {
    if (n <= 1) return;
    if (is_pow2(n))
        fft_radix2(x, n, inverse);
    else
        dft_direct(x, n, inverse);
}

void fft(std::vector<cplx>& x, bool inverse) { fft(x.data(), x.size(), inverse); }

} // namespace isac
