#pragma once

#include <complex>
#include <vector>

namespace toepcomm {

using Complex = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 transform. With invert == false computes
//   X_j = sum_k a_k exp(-2*pi*i*j*k/n),
// with invert == true the sign of the exponent flips. No 1/n scaling is
// applied in either direction; callers normalize as needed.
// Requires a.size() to be a power of two.
void fft(std::vector<Complex>& a, bool invert);

// X_j = sum_k a_k exp(sign * 2*pi*i*j*k/n) for arbitrary n (O(n^2) fallback).
std::vector<Complex> dft_direct(const std::vector<Complex>& a, int sign);

}  // namespace toepcomm
