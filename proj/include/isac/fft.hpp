#pragma once

#include "isac/types.hpp"

namespace isac {

// Unnormalized DFT. Forward: X[k] = sum_n x[n] e^{-j2pi nk/K}.
// Inverse uses e^{+j2pi nk/K} and applies no 1/K scaling.
// Radix-2 in-place for power-of-two lengths, direct summation otherwise.
void fft(cplx* x, std::size_t n, bool inverse);
void fft(std::vector<cplx>& x, bool inverse);

} // namespace isac
