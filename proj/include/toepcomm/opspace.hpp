#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "toepcomm/symbol.hpp"

namespace toepcomm {

// Dense N^2 x N^2 solves back the commutant machinery; keep them desk
// sized.
inline constexpr int kCommutantDimCap = 24;
inline constexpr double kRankTolerance = 1e-10;

// An operator compressed to span{1, z, ..., z^{N-1}}. Toeplitz
// compressions of analytic symbols are lower triangular with constant
// diagonals: entry(i, j) = c_{i-j} for i >= j.
struct TruncatedOperator {
    Eigen::MatrixXcd matrix;
    std::string label;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

// Throws OrderMismatch when n exceeds the truncation order of s.
TruncatedOperator toeplitz_truncation(const TaylorSymbol& s, int n);

// Coefficient vector of the reproducing kernel k_a(z) = 1/(1 - conj(a) z)
// truncated to n entries: (1, conj(a), conj(a)^2, ...).
Eigen::VectorXcd kernel_vector(Complex a, int n);

// || T^H k_a - conj(phi(a)) k_a || / || k_a || for the n-dimensional
// compression; decays geometrically in n like |a|^n for polynomial
// symbols.
double adjoint_eigen_residual(const TaylorSymbol& s, Complex a, int n);

// Orthonormal basis (Frobenius inner product) of {X : XT = TX}, found as
// the null space of the commutation map vec X -> vec(XT - TX) via SVD.
// Singular values below tol * sigma_max count as null. Throws
// DimensionCap when dim > 24.
std::vector<TruncatedOperator> commutant_basis(const TruncatedOperator& t,
                                               double tol = kRankTolerance);

// Orthonormal basis of {X : XB = BX for every B in basis}, via the
// stacked commutation maps.
std::vector<TruncatedOperator> double_commutant_basis(
    const std::vector<TruncatedOperator>& basis, double tol = kRankTolerance);

// Rank of [vec I, vec T, vec T^2, ...]: the degree of the minimal
// polynomial of T.
int polynomial_algebra_dim(const TruncatedOperator& t, double tol = kRankTolerance);

// Constructive evidence that the polynomials on phi are not dense in the
// truncated space: a unit vector f0 orthogonal to span{1, phi, ...,
// phi^m} together with a separating dictionary element h with
// |<h, f0>| >= 0.1.
struct DensityWitness {
    Eigen::VectorXcd f0;
    int depth;
    double max_pairing;          // max_j |<phi^j, f0>|, <= 1e-8
    TaylorSymbol separating_h;
    double separating_pairing;   // |<h, f0>| >= 0.1
};

// nullopt means the column span is numerically the whole truncated space
// (dense at this truncation). Requires depth >= 1 and, for exact
// polynomial symbols, n >= depth * deg(s).
std::optional<DensityWitness> density_witness(const TaylorSymbol& s, int n, int depth);

// max over test vectors f in {z^j : j < N/2} of |(Xf)(a) - (X1)(a) f(a)|
// where (g)(a) denotes the kernel pairing <g, k_a>. Requires
// ||XT - TX||_F <= 1e-8 (throws NotACommutantElement otherwise); callers
// supply a from a single-covered region.
double deddens_wong_identity_residual(const TaylorSymbol& s, const TruncatedOperator& x,
                                      Complex a);

// Cesaro mean of the Taylor partial sums: coefficient k of the output is
// c_k (1 - k/(n+1)) for k <= n, zero beyond.
TaylorSymbol fejer_polynomial(const TaylorSymbol& h, int n);

// |sigma_n(h)(a) f(a) - h(a) f(a)|.
double fejer_wot_gap(const TaylorSymbol& h, int n, Complex a, const TaylorSymbol& f);

struct SupNormCheck {
    double sigma_norm;  // ||sigma_n(h)|| on 4096 boundary nodes
    double h_norm;      // ||h|| on the same grid
    bool ok;            // sigma_norm <= h_norm * (1 + 1e-9)
};

SupNormCheck fejer_supnorm_check(const TaylorSymbol& h, int n);

// F_1..F_n with f(z) = F_1(z^n) + z F_2(z^n) + ... + z^{n-1} F_n(z^n);
// component F_{j+1} collects the coefficients of f at indices = j mod n.
// The reconstruction is coefficient exact.
std::vector<TaylorSymbol> wold_components(const TaylorSymbol& f, int n);

// Diagonal 0/1 matrix keeping indices = 0 mod n; commutes exactly with
// the truncated multiplication by z^n.
TruncatedOperator wold_projection_matrix(int n, int dim);

// diag(conj(lambda)^j) for unimodular lambda; commutes with the
// truncated multiplication by z^n exactly when lambda^n = 1. When lambda
// is numerically a root of unity the powers are reused cyclically so
// that the commutator vanishes exactly, not approximately. Throws
// NotUnimodular when | |lambda| - 1 | > 1e-12.
TruncatedOperator dilation_matrix(Complex lambda, int dim);

// The order(B) Takenaka-Malmquist vectors
//   e_j(z) = sqrt(1 - |a_j|^2) / (1 - conj(a_j) z) * prod_{i<j} b_{a_i}(z)
// as coefficient vectors truncated at degree `order` (length order + 1).
// They are orthonormal and orthogonal to B z^m up to truncation tails.
std::vector<Eigen::VectorXcd> malmquist_basis(const BlaschkeProduct& b, int order);

// Coefficients of f in the orthonormal family {e_i B^j : i <= order(B),
// j <= depth}, with the l2 reconstruction error; the error decays as the
// depth grows for polynomial f.
struct ModelExpansion {
    Eigen::MatrixXcd alpha;  // order(B) rows, depth+1 columns
    double reconstruction_error;
};

ModelExpansion model_expand(const TaylorSymbol& f, const BlaschkeProduct& b, int depth);

}  // namespace toepcomm
