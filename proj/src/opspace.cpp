#include "toepcomm/opspace.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "toepcomm/errors.hpp"
#include "toepcomm/numfmt.hpp"

namespace toepcomm {

TruncatedOperator toeplitz_truncation(const TaylorSymbol& s, int n) {
    if (n < 1) throw PreconditionError("compression dimension must be at least 1");
    if (n > s.order())
        throw OrderMismatch("compression dimension " + std::to_string(n) +
                            " exceeds the truncation order " + std::to_string(s.order()));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = s.coeff(i - j);
    return {std::move(m), s.label()};
}

Eigen::VectorXcd kernel_vector(Complex a, int n) {
    Eigen::VectorXcd v(n);
    Complex p(1.0);
    const Complex ca = std::conj(a);
    for (int i = 0; i < n; ++i) {
        v(i) = p;
        p *= ca;
    }
    return v;
}

double adjoint_eigen_residual(const TaylorSymbol& s, Complex a, int n) {
    if (!(std::abs(a) < 1.0)) throw PreconditionError("kernel point must lie inside the disk");
    const TruncatedOperator t = toeplitz_truncation(s, n);
    const Eigen::VectorXcd k = kernel_vector(a, n);
    const Eigen::VectorXcd residual = t.matrix.adjoint() * k - std::conj(s.eval(a)) * k;
    return residual.norm() / k.norm();
}

namespace {

// vec(XT - TX) = (T^t (x) I - I (x) T) vec X for column-major vec.
Eigen::MatrixXcd commutation_map(const Eigen::MatrixXcd& t) {
    const int n = static_cast<int>(t.rows());
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n * n, n * n);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            k.block(a * n, b * n, n, n) = t(b, a) * id - (a == b ? t : Eigen::MatrixXcd::Zero(n, n));
    return k;
}

std::vector<TruncatedOperator> null_space_operators(const Eigen::MatrixXcd& map, int n,
                                                    double tol, const std::string& label) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(map, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = (sigma.size() > 0 ? sigma(0) : 0.0) * tol;
    std::vector<TruncatedOperator> basis;
    for (int i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff && sigma(0) > 0.0) continue;
        Eigen::MatrixXcd x(n, n);
        const Eigen::VectorXcd v = svd.matrixV().col(i);
        for (int col = 0; col < n; ++col) x.col(col) = v.segment(col * n, n);
        basis.push_back({std::move(x), label});
    }
    return basis;
}

}  // namespace

std::vector<TruncatedOperator> commutant_basis(const TruncatedOperator& t, double tol) {
    const int n = t.dim();
    if (n > kCommutantDimCap)
        throw DimensionCap("commutant solver capped at dimension " +
                           std::to_string(kCommutantDimCap));
    return null_space_operators(commutation_map(t.matrix), n, tol, t.label + "|commutant");
}

std::vector<TruncatedOperator> double_commutant_basis(const std::vector<TruncatedOperator>& basis,
                                                      double tol) {
    if (basis.empty()) throw PreconditionError("double commutant needs a nonempty basis");
    const int n = basis.front().dim();
    if (n > kCommutantDimCap)
        throw DimensionCap("commutant solver capped at dimension " +
                           std::to_string(kCommutantDimCap));
    Eigen::MatrixXcd stacked(static_cast<int>(basis.size()) * n * n, n * n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        stacked.block(static_cast<int>(i) * n * n, 0, n * n, n * n) =
            commutation_map(basis[i].matrix);
    return null_space_operators(stacked, n, tol, basis.front().label + "|bicommutant");
}

int polynomial_algebra_dim(const TruncatedOperator& t, double tol) {
    const int n = t.dim();
    Eigen::MatrixXcd krylov(n * n, n + 1);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
    for (int j = 0; j <= n; ++j) {
        Eigen::VectorXcd v(n * n);
        for (int col = 0; col < n; ++col) v.segment(col * n, n) = power.col(col);
        const double norm = v.norm();
        krylov.col(j) = norm > 0.0 ? (v / norm).eval() : v;
        power = power * t.matrix;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(krylov);
    const auto& sigma = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) > sigma(0) * tol) ++rank;
    return rank;
}

// ---------------------------------------------------------------------
// Density witness

namespace {

Complex pairing(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    // H^2 coefficient pairing <u, v> = sum u_k conj(v_k)
    return (v.adjoint() * u)(0, 0);
}

}  // namespace

std::optional<DensityWitness> density_witness(const TaylorSymbol& s, int n, int depth) {
    if (depth < 1) throw PreconditionError("witness depth must be at least 1");
    const int deg = s.effective_degree();
    if (s.exact_polynomial() && deg >= 1 && n < depth * deg)
        throw PreconditionError("witness truncation " + std::to_string(n) +
                                " is too small for depth " + std::to_string(depth) +
                                " and degree " + std::to_string(deg));

    // columns: coefficient vectors of phi^j, j = 0..depth
    Eigen::MatrixXcd columns = Eigen::MatrixXcd::Zero(n, depth + 1);
    const int work_order = std::max(n - 1, s.order());
    std::vector<Complex> one(static_cast<std::size_t>(work_order) + 1, Complex(0.0));
    one[0] = Complex(1.0);
    TaylorSymbol power(std::move(one));
    for (int j = 0; j <= depth; ++j) {
        for (int i = 0; i < n; ++i) columns(i, j) = power.coeff(i);
        if (j < depth) power = mul_truncated(power, s, work_order);
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns, Eigen::ComputeFullU);
    const auto& sigma = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) > sigma(0) * kRankTolerance) ++rank;
    if (rank >= n) return std::nullopt;  // dense at this truncation

    // any unit vector orthogonal to the column span; U's trailing columns
    const Eigen::VectorXcd f0 = svd.matrixU().col(n - 1);

    double max_pairing = 0.0;
    for (int j = 0; j <= depth; ++j)
        max_pairing = std::max(max_pairing, std::abs(pairing(columns.col(j), f0)));

    // separating dictionary: monomials z, z^2, ..., z^{n-1}
    int best_k = -1;
    double best = 0.0;
    for (int k = 1; k < n; ++k) {
        const double p = std::abs(std::conj(f0(k)));
        if (p > best) {
            best = p;
            best_k = k;
        }
    }
    if (best_k < 0 || max_pairing > 1e-8 || best < 0.1)
        throw Error("no separating dictionary element reached pairing 0.1 (best " +
                    fmt_double(best) + ", max span pairing " + fmt_double(max_pairing) + ")");

    std::vector<Complex> hc(static_cast<std::size_t>(best_k) + 1, Complex(0.0));
    hc[static_cast<std::size_t>(best_k)] = Complex(1.0);
    TaylorSymbol h(std::move(hc), "z^" + std::to_string(best_k));
    return DensityWitness{f0, depth, max_pairing, std::move(h), best};
}

double deddens_wong_identity_residual(const TaylorSymbol& s, const TruncatedOperator& x,
                                      Complex a) {
    const int n = x.dim();
    const TruncatedOperator t = toeplitz_truncation(s, n);
    const double commutation = (x.matrix * t.matrix - t.matrix * x.matrix).norm();
    if (commutation > 1e-8)
        throw NotACommutantElement("||XT - TX|| = " + fmt_double(commutation));

    const Eigen::VectorXcd k = kernel_vector(a, n);
    const Complex x1_at_a = pairing(x.matrix.col(0), k);
    double worst = 0.0;
    Complex a_pow(1.0);
    for (int j = 0; j < n / 2; ++j) {
        const Complex xf_at_a = pairing(x.matrix.col(j), k);
        worst = std::max(worst, std::abs(xf_at_a - x1_at_a * a_pow));
        a_pow *= a;
    }
    return worst;
}

// ---------------------------------------------------------------------
// Fejer means

TaylorSymbol fejer_polynomial(const TaylorSymbol& h, int n) {
    if (n < 0) throw PreconditionError("Fejer order must be nonnegative");
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k)
        out[static_cast<std::size_t>(k)] =
            h.coeff(k) * (1.0 - static_cast<double>(k) / (static_cast<double>(n) + 1.0));
    return TaylorSymbol(std::move(out), h.label() + "|fejer" + std::to_string(n),
                        h.exact_polynomial());
}

double fejer_wot_gap(const TaylorSymbol& h, int n, Complex a, const TaylorSymbol& f) {
    if (!(std::abs(a) < 1.0)) throw PreconditionError("evaluation point must lie inside the disk");
    const TaylorSymbol sigma = fejer_polynomial(h, n);
    return std::abs(sigma.eval(a) * f.eval(a) - h.eval(a) * f.eval(a));
}

SupNormCheck fejer_supnorm_check(const TaylorSymbol& h, int n) {
    const double sigma_norm = fejer_polynomial(h, n).sup_norm_grid(4096);
    const double h_norm = h.sup_norm_grid(4096);
    return {sigma_norm, h_norm, sigma_norm <= h_norm * (1.0 + 1e-9)};
}

// ---------------------------------------------------------------------
// Wold pieces

std::vector<TaylorSymbol> wold_components(const TaylorSymbol& f, int n) {
    if (n < 1) throw PreconditionError("component count must be at least 1");
    std::vector<TaylorSymbol> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Complex> c;
        for (int i = j; i <= f.order(); i += n) c.push_back(f.coeff(i));
        if (c.empty()) c.push_back(Complex(0.0));
        parts.emplace_back(std::move(c), f.label() + "|wold" + std::to_string(j + 1),
                           f.exact_polynomial());
    }
    return parts;
}

TruncatedOperator wold_projection_matrix(int n, int dim) {
    if (n < 1) throw PreconditionError("modulus must be at least 1");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; i += n) m(i, i) = Complex(1.0);
    return {std::move(m), "wold-projection-" + std::to_string(n)};
}

TruncatedOperator dilation_matrix(Complex lambda, int dim) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw NotUnimodular("dilation parameter must have modulus 1");

    // Detect a finite rotation order q (|lambda^q - 1| <= 1e-12) and reuse
    // the q computed powers cyclically; commutators with M_{z^n} for
    // q | n then vanish exactly rather than to round-off.
    const int max_order = std::max(64, 4 * dim);
    int order = 0;
    Complex p(1.0);
    for (int q = 1; q <= max_order; ++q) {
        p *= lambda;
        if (std::abs(p - Complex(1.0)) <= 1e-12) {
            order = q;
            break;
        }
    }

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    if (order > 0) {
        std::vector<Complex> cycle(static_cast<std::size_t>(order));
        Complex c(1.0);
        for (int t = 0; t < order; ++t) {
            cycle[static_cast<std::size_t>(t)] = c;
            c *= std::conj(lambda);
        }
        for (int i = 0; i < dim; ++i) m(i, i) = cycle[static_cast<std::size_t>(i % order)];
    } else {
        Complex c(1.0);
        for (int i = 0; i < dim; ++i) {
            m(i, i) = c;
            c *= std::conj(lambda);
        }
    }
    return {std::move(m), "dilation"};
}

// ---------------------------------------------------------------------
// Model space basis

namespace {

// Truncated coefficient vector (length order+1) of one normalized
// Blaschke factor.
std::vector<Complex> factor_coeffs(Complex a, int order) {
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(0.0));
    if (a == Complex(0.0)) {
        if (order >= 1) out[1] = Complex(1.0);
        return out;
    }
    const Complex unit = std::abs(a) / a;
    const Complex ca = std::conj(a);
    Complex cak(1.0), prev(0.0);
    for (int k = 0; k <= order; ++k) {
        out[static_cast<std::size_t>(k)] = unit * (a * cak - prev);
        prev = cak;
        cak *= ca;
    }
    return out;
}

std::vector<Complex> convolve_truncated(const std::vector<Complex>& a,
                                        const std::vector<Complex>& b, int order) {
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(0.0));
    for (int n = 0; n <= order; ++n) {
        Complex acc(0.0);
        for (int k = 0; k <= n; ++k) {
            if (k >= static_cast<int>(b.size())) break;
            if (n - k >= static_cast<int>(a.size())) continue;
            acc += a[static_cast<std::size_t>(n - k)] * b[static_cast<std::size_t>(k)];
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

}  // namespace

std::vector<Eigen::VectorXcd> malmquist_basis(const BlaschkeProduct& b, int order) {
    if (b.order() < 1) throw PreconditionError("Blaschke product must have at least one zero");
    if (order < 4 * b.order())
        throw PreconditionError("Malmquist truncation must be at least 4x the Blaschke order");

    std::vector<Eigen::VectorXcd> basis;
    std::vector<Complex> partial(static_cast<std::size_t>(order) + 1, Complex(0.0));
    partial[0] = Complex(1.0);  // product of factors b_{a_i}, i < j
    for (int j = 0; j < b.order(); ++j) {
        const Complex a = b.zeros()[static_cast<std::size_t>(j)];
        // sqrt(1 - |a|^2) / (1 - conj(a) z) as a geometric series
        std::vector<Complex> kernel(static_cast<std::size_t>(order) + 1);
        const double norm = std::sqrt(1.0 - std::norm(a));
        const Complex ca = std::conj(a);
        Complex cak(1.0);
        for (int k = 0; k <= order; ++k) {
            kernel[static_cast<std::size_t>(k)] = norm * cak;
            cak *= ca;
        }
        const std::vector<Complex> coeffs = convolve_truncated(partial, kernel, order);
        Eigen::VectorXcd v(order + 1);
        for (int k = 0; k <= order; ++k) v(k) = coeffs[static_cast<std::size_t>(k)];
        basis.push_back(std::move(v));
        partial = convolve_truncated(partial, factor_coeffs(a, order), order);
    }
    return basis;
}

ModelExpansion model_expand(const TaylorSymbol& f, const BlaschkeProduct& b, int depth) {
    if (depth < 0) throw PreconditionError("expansion depth must be nonnegative");
    const int ord = b.order();
    const int n = std::max(f.order(), std::max(4 * ord, (depth + 2) * ord));
    if (n > kMaxTruncationOrder)
        throw PreconditionError("expansion depth needs truncation beyond the cap");

    const std::vector<Eigen::VectorXcd> e = malmquist_basis(b, n);
    const TaylorSymbol bs = blaschke_to_taylor(b, n);

    Eigen::VectorXcd fv = Eigen::VectorXcd::Zero(n + 1);
    for (int k = 0; k <= std::min(n, f.order()); ++k) fv(k) = f.coeff(k);

    Eigen::MatrixXcd alpha(ord, depth + 1);
    Eigen::VectorXcd reconstruction = Eigen::VectorXcd::Zero(n + 1);
    TaylorSymbol bpow(std::vector<Complex>{Complex(1.0)});
    for (int j = 0; j <= depth; ++j) {
        for (int i = 0; i < ord; ++i) {
            // e_i * B^j as a coefficient vector
            std::vector<Complex> ei(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) ei[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(i)](k);
            const std::vector<Complex> member = convolve_truncated(ei, bpow.coeffs(), n);
            Eigen::VectorXcd mv(n + 1);
            for (int k = 0; k <= n; ++k) mv(k) = member[static_cast<std::size_t>(k)];
            const Complex c = pairing(fv, mv);
            alpha(i, j) = c;
            reconstruction += c * mv;
        }
        bpow = mul_truncated(bpow, bs, n);
    }
    return {std::move(alpha), (fv - reconstruction).norm()};
}

}  // namespace toepcomm
