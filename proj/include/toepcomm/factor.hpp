#pragma once

#include "toepcomm/symbol.hpp"

namespace toepcomm {

// gcd of all indices j >= 1 with |c_j| > tol. Throws ConstantSymbolError
// when no such index exists.
int support_gcd(const TaylorSymbol& s, double tol = kNoiseFloor);

// phi(z) = h(z^k) with k maximal: k is the support gcd and h collects
// the coefficients h_j = c_{jk}. The residual is the sup over 4096 unit
// circle nodes of |phi(z) - h(z^k)| after re-expansion.
struct BDUFactorization {
    int k;
    TaylorSymbol h;
    double residual;
};

BDUFactorization bdu_factor(const TaylorSymbol& s);

// k computed two independent ways: algebraically (support gcd) and
// geometrically (minimal nonzero winding over a polar-grid profile).
// Downstream consumers require agreement before trusting k.
struct BDUCrossCheck {
    int k_gcd;
    int k_wind;
    bool agree;
};

BDUCrossCheck bdu_crosscheck(const TaylorSymbol& s, int grid = 24);

// The inner part of phi - phi(lambda): the Blaschke product whose zeros
// are the roots of phi(z) - phi(lambda) with |z| < 1 (companion-matrix
// eigenvalues, multiplicity preserved). Throws BoundaryZeroError when a
// root has |z| within 1e-8 of the unit circle, and UnsupportedSymbol for
// non-polynomial symbols.
BlaschkeProduct tc_inner_part(const TaylorSymbol& s, Complex lambda);

struct TCFactorization {
    BlaschkeProduct blaschke;
    TaylorSymbol h;  // polynomial in B of degree <= fit degree
    double residual;  // sup over 4096 circle nodes of |phi - h(B)|
};

// Least-squares polynomial h of degree <= fit_degree minimizing the mean
// square error of phi - h(B) on 4096 unit circle nodes. Throws
// IllConditioned when the design matrix condition estimate exceeds 1e12.
TCFactorization fit_through_blaschke(const TaylorSymbol& s, const BlaschkeProduct& b,
                                     int fit_degree);

// Default fit degree: ceil(deg phi / order B) + 2.
int default_fit_degree(const TaylorSymbol& s, const BlaschkeProduct& b);

}  // namespace toepcomm
