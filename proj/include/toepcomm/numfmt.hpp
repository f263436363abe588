#pragma once

#include <complex>
#include <string>

namespace toepcomm {

// Locale-independent numeric formatting for reports: 17 significant
// digits, "." decimal separator.
std::string fmt_double(double x);
std::string fmt_complex(std::complex<double> z);

// Shortest round-trip representation (std::to_chars), used by the DSL
// renderer.
std::string fmt_shortest(double x);

}  // namespace toepcomm
