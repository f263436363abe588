#pragma once

#include <complex>
#include <string>
#include <vector>

namespace toepcomm {

using Complex = std::complex<double>;

// Coefficients with modulus below this are treated as zero by support
// detection (support_gcd, effective_degree, inner tests). It separates
// circle-sampling round-off from genuine series support.
inline constexpr double kNoiseFloor = 1e-9;

inline constexpr int kMaxTruncationOrder = 512;
inline constexpr int kDefaultTruncationOrder = 256;

// A bounded analytic symbol represented by its Taylor coefficients
// c_0..c_N at the origin, truncated at degree N. This is the universal
// carrier for every symbol the library manipulates.
class TaylorSymbol {
  public:
    TaylorSymbol() : coeffs_(1, Complex(0.0)) {}
    // coeffs holds c_0..c_N in degree order; the truncation order is
    // coeffs.size() - 1.
    explicit TaylorSymbol(std::vector<Complex> coeffs, std::string label = "",
                          bool exact_polynomial = true);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
    }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    // True when the symbol is known to be an exact polynomial (as opposed
    // to the truncation of a non-polynomial function, e.g. a Blaschke
    // product with a nonzero zero). Companion-matrix root arguments are
    // only trusted for exact polynomials.
    bool exact_polynomial() const { return exact_polynomial_; }

    // Largest index k with |c_k| > tol, or -1 when all coefficients are
    // below the floor.
    int effective_degree(double tol = kNoiseFloor) const;

    // Horner evaluation of the truncated series.
    Complex eval(Complex z) const;

    // Values s(r e^{2 pi i j / M}) for j = 0..M-1, computed by a DFT of
    // the zero-padded coefficients scaled by r^k. Throws ResolutionError
    // when M < 2N.
    std::vector<Complex> eval_circle(int node_count, double radius = 1.0) const;

    // Coefficients k*c_k shifted down one degree; truncation order N-1
    // (a constant input yields the zero series of order 0).
    TaylorSymbol derivative() const;

    // max_j |s(e^{i theta_j})| over `nodes` equispaced boundary points.
    double sup_norm_grid(int nodes = 4096) const;

  private:
    std::vector<Complex> coeffs_;
    std::string label_;
    bool exact_polynomial_ = true;
};

// Truncated series arithmetic. Sums keep the larger order; products and
// powers truncate at `order`.
TaylorSymbol add(const TaylorSymbol& a, const TaylorSymbol& b);
TaylorSymbol sub(const TaylorSymbol& a, const TaylorSymbol& b);
TaylorSymbol scale(const TaylorSymbol& a, Complex factor);
TaylorSymbol mul_truncated(const TaylorSymbol& a, const TaylorSymbol& b, int order);
TaylorSymbol pow_truncated(const TaylorSymbol& a, int exponent, int order);

// Antiderivative with constant term 0 (test support for the derivative
// round-trip property).
TaylorSymbol antiderivative(const TaylorSymbol& s);

// A finite Blaschke product: unimodular constant times the product of
// the normalized factors (|a|/a)(a - z)/(1 - conj(a) z), with the factor
// z for a zero at the origin.
class BlaschkeProduct {
  public:
    BlaschkeProduct() : constant_(1.0) {}
    explicit BlaschkeProduct(std::vector<Complex> zeros, Complex unimodular_constant = Complex(1.0));

    const std::vector<Complex>& zeros() const { return zeros_; }
    Complex unimodular_constant() const { return constant_; }
    int order() const { return static_cast<int>(zeros_.size()); }

    Complex eval(Complex z) const;

  private:
    std::vector<Complex> zeros_;
    Complex constant_;
};

// Taylor coefficients of the product expanded by geometric-series
// convolution, truncated at `order`. The result is flagged as an exact
// polynomial only when every zero is at the origin.
TaylorSymbol blaschke_to_taylor(const BlaschkeProduct& b, int order);

}  // namespace toepcomm
