#include "toepcomm/factor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "toepcomm/curve.hpp"
#include "toepcomm/errors.hpp"
#include "toepcomm/numfmt.hpp"
#include "toepcomm/roots.hpp"

namespace toepcomm {

namespace {

constexpr int kResidualNodes = 4096;

double sup_residual(const TaylorSymbol& s, const std::vector<Complex>& model_values) {
    const std::vector<Complex> values = s.eval_circle(kResidualNodes, 1.0);
    double worst = 0.0;
    for (int j = 0; j < kResidualNodes; ++j)
        worst = std::max(worst, std::abs(values[static_cast<std::size_t>(j)] -
                                         model_values[static_cast<std::size_t>(j)]));
    return worst;
}

}  // namespace

int support_gcd(const TaylorSymbol& s, double tol) {
    int g = 0;
    for (int j = 1; j <= s.order(); ++j)
        if (std::abs(s.coeff(j)) > tol) g = std::gcd(g, j);
    if (g == 0) throw ConstantSymbolError("symbol has no support above the tolerance");
    return g;
}

BDUFactorization bdu_factor(const TaylorSymbol& s) {
    const int k = support_gcd(s, kNoiseFloor);
    std::vector<Complex> hc;
    for (int j = 0; j * k <= s.order(); ++j) hc.push_back(s.coeff(j * k));
    TaylorSymbol h(std::move(hc), s.label() + "|bdu-h", s.exact_polynomial());

    // residual of the re-expansion h(z^k) against phi on the circle
    std::vector<Complex> model(kResidualNodes);
    for (int j = 0; j < kResidualNodes; ++j) {
        const Complex zk = std::polar(1.0, 2.0 * std::numbers::pi * j * k / kResidualNodes);
        model[static_cast<std::size_t>(j)] = h.eval(zk);
    }
    return {k, std::move(h), sup_residual(s, model)};
}

BDUCrossCheck bdu_crosscheck(const TaylorSymbol& s, int grid) {
    if (!s.exact_polynomial())
        throw UnsupportedSymbol("bdu_crosscheck applies to polynomial symbols");
    const int k_gcd = support_gcd(s, kNoiseFloor);
    const int k_wind = minimal_winding(winding_profile(s, grid));
    return {k_gcd, k_wind, k_gcd == k_wind};
}

BlaschkeProduct tc_inner_part(const TaylorSymbol& s, Complex lambda) {
    if (!s.exact_polynomial())
        throw UnsupportedSymbol("tc_inner_part applies to polynomial symbols");
    if (s.effective_degree() < 1) throw ConstantSymbolError("constant symbol has no inner part");

    std::vector<Complex> shifted = s.coeffs();
    shifted[0] -= s.eval(lambda);
    std::vector<Complex> zeros;
    for (const Complex& r : polynomial_roots(shifted)) {
        const double mod = std::abs(r);
        if (std::abs(mod - 1.0) <= 1e-8)
            throw BoundaryZeroError("root " + fmt_complex(r) + " of phi - phi(lambda) lies on the unit circle");
        if (mod < 1.0) zeros.push_back(r);
    }
    std::sort(zeros.begin(), zeros.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return BlaschkeProduct(std::move(zeros));
}

TCFactorization fit_through_blaschke(const TaylorSymbol& s, const BlaschkeProduct& b,
                                     int fit_degree) {
    if (fit_degree < 1) throw PreconditionError("fit degree must be at least 1");

    Eigen::MatrixXcd design(kResidualNodes, fit_degree + 1);
    Eigen::VectorXcd target(kResidualNodes);
    const std::vector<Complex> values = s.eval_circle(kResidualNodes, 1.0);
    for (int j = 0; j < kResidualNodes; ++j) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / kResidualNodes);
        const Complex bz = b.eval(z);
        Complex p(1.0);
        for (int m = 0; m <= fit_degree; ++m) {
            design(j, m) = p;
            p *= bz;
        }
        target(j) = values[static_cast<std::size_t>(j)];
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sigma_max = svd.singularValues()(0);
    const double sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
    if (sigma_min <= 0.0 || sigma_max / sigma_min > 1e12)
        throw IllConditioned("fit design matrix condition estimate exceeds 1e12");
    const Eigen::VectorXcd h = svd.solve(target);

    std::vector<Complex> hc(static_cast<std::size_t>(fit_degree) + 1);
    for (int m = 0; m <= fit_degree; ++m) hc[static_cast<std::size_t>(m)] = h(m);
    TaylorSymbol hsym(std::move(hc), s.label() + "|tc-h", true);

    const Eigen::VectorXcd fitted = design * h;
    double worst = 0.0;
    for (int j = 0; j < kResidualNodes; ++j) worst = std::max(worst, std::abs(target(j) - fitted(j)));
    return {b, std::move(hsym), worst};
}

int default_fit_degree(const TaylorSymbol& s, const BlaschkeProduct& b) {
    const int deg = std::max(1, s.effective_degree());
    const int ord = std::max(1, b.order());
    return (deg + ord - 1) / ord + 2;
}

}  // namespace toepcomm
