#include "toepcomm/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "toepcomm/errors.hpp"
#include "toepcomm/fourier.hpp"

namespace toepcomm {

TaylorSymbol::TaylorSymbol(std::vector<Complex> coeffs, std::string label, bool exact_polynomial)
    : coeffs_(std::move(coeffs)), label_(std::move(label)), exact_polynomial_(exact_polynomial) {
    if (coeffs_.empty()) throw PreconditionError("a symbol needs at least the constant coefficient");
    if (order() > kMaxTruncationOrder)
        throw PreconditionError("truncation order exceeds the cap of " +
                                std::to_string(kMaxTruncationOrder));
}

int TaylorSymbol::effective_degree(double tol) const {
    for (int k = order(); k >= 0; --k)
        if (std::abs(coeffs_[k]) > tol) return k;
    return -1;
}

Complex TaylorSymbol::eval(Complex z) const {
    Complex acc = coeffs_.back();
    for (int k = order() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
    return acc;
}

std::vector<Complex> TaylorSymbol::eval_circle(int node_count, double radius) const {
    if (node_count < 2 * order())
        throw ResolutionError("eval_circle needs at least 2N nodes, got " +
                              std::to_string(node_count) + " for order " +
                              std::to_string(order()));
    if (!(radius > 0.0 && radius <= 1.0))
        throw PreconditionError("eval_circle radius must lie in (0, 1]");

    std::vector<Complex> padded(static_cast<std::size_t>(node_count), Complex(0.0));
    double rk = 1.0;
    for (int k = 0; k <= order(); ++k) {
        padded[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)] * rk;
        rk *= radius;
    }
    if (is_power_of_two(padded.size())) {
        fft(padded, /*invert=*/true);
        return padded;
    }
    return dft_direct(padded, +1);
}

TaylorSymbol TaylorSymbol::derivative() const {
    if (order() == 0) return TaylorSymbol({Complex(0.0)}, label_, exact_polynomial_);
    std::vector<Complex> out(static_cast<std::size_t>(order()));
    for (int k = 1; k <= order(); ++k)
        out[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * coeffs_[static_cast<std::size_t>(k)];
    return TaylorSymbol(std::move(out), label_, exact_polynomial_);
}

double TaylorSymbol::sup_norm_grid(int nodes) const {
    const int m = std::max(nodes, 2 * order());
    double best = 0.0;
    for (const Complex& v : eval_circle(m, 1.0)) best = std::max(best, std::abs(v));
    return best;
}

TaylorSymbol add(const TaylorSymbol& a, const TaylorSymbol& b) {
    std::vector<Complex> out(static_cast<std::size_t>(std::max(a.order(), b.order())) + 1, Complex(0.0));
    for (int k = 0; k < static_cast<int>(out.size()); ++k) out[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return TaylorSymbol(std::move(out), "", a.exact_polynomial() && b.exact_polynomial());
}

TaylorSymbol sub(const TaylorSymbol& a, const TaylorSymbol& b) {
    std::vector<Complex> out(static_cast<std::size_t>(std::max(a.order(), b.order())) + 1, Complex(0.0));
    for (int k = 0; k < static_cast<int>(out.size()); ++k) out[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return TaylorSymbol(std::move(out), "", a.exact_polynomial() && b.exact_polynomial());
}

TaylorSymbol scale(const TaylorSymbol& a, Complex factor) {
    std::vector<Complex> out = a.coeffs();
    for (Complex& c : out) c *= factor;
    return TaylorSymbol(std::move(out), a.label(), a.exact_polynomial());
}

TaylorSymbol mul_truncated(const TaylorSymbol& a, const TaylorSymbol& b, int order) {
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(0.0));
    // c_n = sum_k a_{n-k} b_k with the second factor's index ascending;
    // this matches the entrywise lower-triangular Toeplitz product order.
    for (int n = 0; n <= order; ++n) {
        Complex acc(0.0);
        const int lo = std::max(0, n - a.order());
        const int hi = std::min(n, b.order());
        for (int k = lo; k <= hi; ++k) acc += a.coeff(n - k) * b.coeff(k);
        out[static_cast<std::size_t>(n)] = acc;
    }
    return TaylorSymbol(std::move(out), "", a.exact_polynomial() && b.exact_polynomial());
}

TaylorSymbol pow_truncated(const TaylorSymbol& a, int exponent, int order) {
    if (exponent < 0) throw PreconditionError("negative exponents are not representable");
    std::vector<Complex> one(static_cast<std::size_t>(order) + 1, Complex(0.0));
    one[0] = Complex(1.0);
    TaylorSymbol acc(std::move(one), "", true);
    TaylorSymbol base = a;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc = mul_truncated(acc, base, order);
        base = mul_truncated(base, base, order);
        e >>= 1;
    }
    return acc;
}

TaylorSymbol antiderivative(const TaylorSymbol& s) {
    std::vector<Complex> out(static_cast<std::size_t>(s.order()) + 2, Complex(0.0));
    for (int k = 0; k <= s.order(); ++k)
        out[static_cast<std::size_t>(k + 1)] = s.coeff(k) / static_cast<double>(k + 1);
    return TaylorSymbol(std::move(out), s.label(), s.exact_polynomial());
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex unimodular_constant)
    : zeros_(std::move(zeros)), constant_(unimodular_constant) {
    for (const Complex& a : zeros_)
        if (!(std::abs(a) < 1.0))
            throw PreconditionError("Blaschke zeros must lie strictly inside the unit disk");
    if (std::abs(std::abs(constant_) - 1.0) > 1e-12)
        throw NotUnimodular("Blaschke constant must have modulus 1");
}

Complex BlaschkeProduct::eval(Complex z) const {
    Complex acc = constant_;
    for (const Complex& a : zeros_) {
        if (a == Complex(0.0)) {
            acc *= z;
        } else {
            acc *= (std::abs(a) / a) * (a - z) / (Complex(1.0) - std::conj(a) * z);
        }
    }
    return acc;
}

namespace {

// Truncated series of one normalized factor.
TaylorSymbol blaschke_factor_series(Complex a, int order) {
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(0.0));
    if (a == Complex(0.0)) {
        if (order >= 1) out[1] = Complex(1.0);
        return TaylorSymbol(std::move(out), "", true);
    }
    // (|a|/a)(a - z) * sum_k conj(a)^k z^k
    const Complex unit = std::abs(a) / a;
    const Complex ca = std::conj(a);
    Complex cak = Complex(1.0);  // conj(a)^k
    for (int k = 0; k <= order; ++k) {
        Complex c = a * cak;
        if (k >= 1) c -= cak / ca;  // conj(a)^{k-1}
        out[static_cast<std::size_t>(k)] = unit * c;
        cak *= ca;
    }
    return TaylorSymbol(std::move(out), "", false);
}

}  // namespace

TaylorSymbol blaschke_to_taylor(const BlaschkeProduct& b, int order) {
    std::vector<Complex> one(static_cast<std::size_t>(order) + 1, Complex(0.0));
    one[0] = b.unimodular_constant();
    TaylorSymbol acc(std::move(one), "", true);
    bool poly = true;
    for (const Complex& a : b.zeros()) {
        acc = mul_truncated(acc, blaschke_factor_series(a, order), order);
        poly = poly && (a == Complex(0.0));
    }
    return TaylorSymbol(acc.coeffs(), "", poly);
}

}  // namespace toepcomm
