#pragma once

#include <vector>

#include "toepcomm/symbol.hpp"

namespace toepcomm {

// All complex roots of c_0 + c_1 z + ... + c_d z^d, d >= 1, via the
// eigenvalues of the balanced companion matrix. Trailing coefficients at
// or below `tol` are trimmed first.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs,
                                      double tol = kNoiseFloor);

// Roots of s(z) - w inside the open unit disk (|z| < 1), multiplicity
// represented by repeated eigenvalues. Only meaningful for exact
// polynomial symbols.
std::vector<Complex> interior_preimages(const TaylorSymbol& s, Complex w,
                                        double tol = kNoiseFloor);

}  // namespace toepcomm
