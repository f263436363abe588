#include "toepcomm/roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "toepcomm/errors.hpp"

namespace toepcomm {

namespace {

// Parlett-Reinsch style balancing with powers-of-two scaling; improves
// companion-matrix eigenvalue accuracy without rounding error.
void balance(Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(m(j, i));
                r += std::abs(m(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c > r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r < 0.95 * s) {
                converged = false;
                m.col(i) *= f;
                m.row(i) /= f;
            }
        }
    }
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double tol) {
    int degree = static_cast<int>(coeffs.size()) - 1;
    while (degree > 0 && std::abs(coeffs[static_cast<std::size_t>(degree)]) <= tol) --degree;
    if (degree < 1) throw ConstantSymbolError("polynomial_roots needs degree >= 1");

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    const Complex lead = coeffs[static_cast<std::size_t>(degree)];
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = Complex(1.0);
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    balance(companion);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

std::vector<Complex> interior_preimages(const TaylorSymbol& s, Complex w, double tol) {
    std::vector<Complex> shifted = s.coeffs();
    shifted[0] -= w;
    std::vector<Complex> inside;
    for (const Complex& r : polynomial_roots(shifted, tol))
        if (std::abs(r) < 1.0) inside.push_back(r);
    return inside;
}

}  // namespace toepcomm
