#include "toepcomm/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toepcomm {

void fft(std::vector<Complex>& a, bool invert) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (invert ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const Complex wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<Complex> dft_direct(const std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    std::vector<Complex> out(n, Complex(0.0));
    const double base = 2.0 * std::numbers::pi * (sign >= 0 ? 1.0 : -1.0) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex acc(0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double ang = base * static_cast<double>((j * k) % n);
            acc += a[k] * std::polar(1.0, ang);
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace toepcomm
