#include "toepcomm/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace toepcomm {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "i";
}

std::string fmt_shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) return fmt_double(x);
    return std::string(buf, ptr);
}

}  // namespace toepcomm
