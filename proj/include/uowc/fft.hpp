#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace uowc {

using cplx = std::complex<double>;

// In-place radix-2 FFT. n must be a power of two. The inverse transform
// carries the 1/n factor so ifft(fft(x)) == x.
void fft(std::vector<cplx>& a);
void ifft(std::vector<cplx>& a);

std::size_t next_pow2(std::size_t n);

// Reference O(n^2) DFT, for tests.
std::vector<cplx> dft_reference(const std::vector<cplx>& a);

}  // namespace uowc
