#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "toepcomm/curve.hpp"
#include "toepcomm/errors.hpp"
#include "toepcomm/expr.hpp"
#include "toepcomm/symbol.hpp"

using namespace toepcomm;

namespace {

TaylorSymbol sym(const std::string& dsl, int order = 32) { return lower_dsl(dsl, order); }

// Independent argument-principle oracle: multiplicity-weighted count of
// roots of p(z) = w inside the open disk, straight from Eigen companion
// eigenvalues (kept separate from the library's root path on purpose).
int oracle_interior_count(const std::vector<Complex>& coeffs, Complex w) {
    std::vector<Complex> p = coeffs;
    p[0] -= w;
    int degree = static_cast<int>(p.size()) - 1;
    while (degree > 0 && std::abs(p[static_cast<std::size_t>(degree)]) < 1e-13) --degree;
    if (degree == 0) return 0;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i)
        companion(i, degree - 1) = -p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(degree)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    int inside = 0;
    for (int i = 0; i < degree; ++i)
        if (std::abs(solver.eigenvalues()(i)) < 1.0) ++inside;
    return inside;
}

double min_root_circle_gap(const std::vector<Complex>& coeffs, Complex w) {
    std::vector<Complex> p = coeffs;
    p[0] -= w;
    int degree = static_cast<int>(p.size()) - 1;
    while (degree > 0 && std::abs(p[static_cast<std::size_t>(degree)]) < 1e-13) --degree;
    if (degree == 0) return 1.0;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i)
        companion(i, degree - 1) = -p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(degree)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    double gap = 1.0;
    for (int i = 0; i < degree; ++i)
        gap = std::min(gap, std::abs(std::abs(solver.eigenvalues()(i)) - 1.0));
    return gap;
}

}  // namespace

TEST_CASE("winding numbers of the cardioid match the root-count oracle") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    // (z+1/2)^2 = 0 has a double root at -1/2: oracle gives 2
    CHECK(oracle_interior_count(cardioid.coeffs(), Complex(0.0)) == 2);
    CHECK(winding_number(cardioid, Complex(0.0)) == 2);
    // (z+1/2)^2 = 1.21 has roots 0.6 (inside) and -1.6 (outside)
    CHECK(oracle_interior_count(cardioid.coeffs(), Complex(1.21)) == 1);
    CHECK(winding_number(cardioid, Complex(1.21)) == 1);
}

TEST_CASE("winding number of a pure power is its exponent") {
    CHECK(winding_number(sym("z^6"), Complex(0.0)) == 6);
}

TEST_CASE("on-curve targets are rejected") {
    CHECK_THROWS_AS(winding_number(sym("z"), Complex(1.0, 0.0)), OnCurveError);
}

TEST_CASE("curve construction validates the node count") {
    CHECK_THROWS_AS(BoundaryCurve(sym("z"), 100), PreconditionError);
    CHECK_THROWS_AS(BoundaryCurve(sym("z"), 3000), PreconditionError);
}

TEST_CASE("valence: preimage counts with the cross-check") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    CHECK(valence(cardioid, Complex(0.0)) == 2);
    CHECK(valence(cardioid, Complex(5.0)) == 0);
    CHECK(valence(sym("z"), Complex(0.3, 0.2)) == 1);
    CHECK(valence(sym("z"), Complex(-0.7, 0.1)) == 1);
}

TEST_CASE("winding profile shapes") {
    const WindingProfile cardioid = winding_profile(sym("(z+0.5)^2"), 16);
    bool has1 = false, has2 = false;
    for (const WindingSample& s : cardioid.samples) {
        if (s.n == 1) has1 = true;
        if (s.n == 2) has2 = true;
        CHECK(s.n >= 0);
    }
    CHECK(has1);
    CHECK(has2);

    for (const WindingSample& s : winding_profile(sym("z^2"), 8).samples) CHECK(s.n == 2);
    for (const WindingSample& s : winding_profile(sym("z+0.5"), 8).samples) CHECK(s.n == 1);
}

TEST_CASE("profile rejects too-coarse grids") {
    CHECK_THROWS_AS(winding_profile(sym("z"), 4), PreconditionError);
}

TEST_CASE("minimal winding") {
    CHECK(minimal_winding(winding_profile(sym("(z+0.5)^2"), 16)) == 1);
    CHECK(minimal_winding(winding_profile(sym("z^6"), 8)) == 6);
    CHECK(minimal_winding(winding_profile(sym("z+0.5"), 8)) == 1);
}

TEST_CASE("winding constancy and witnesses") {
    const auto cardioid = winding_inconstancy(winding_profile(sym("(z+0.5)^2"), 16));
    REQUIRE(cardioid.has_value());
    CHECK(cardioid->first.n != cardioid->second.n);

    CHECK_FALSE(winding_inconstancy(winding_profile(sym("z^3"), 8)).has_value());

    // a degree-2 Blaschke product covers the disk exactly twice
    const TaylorSymbol b = lower_dsl("blaschke[0.5,-0.5]", 256);
    const WindingProfile bp = winding_profile(b, 8);
    CHECK_FALSE(winding_inconstancy(bp).has_value());
    CHECK(minimal_winding(bp) == 2);
}

TEST_CASE("jordan test: cardioid has exactly one crossing near -3/4") {
    const BoundaryCurve curve(sym("(z+0.5)^2"), 4096);
    const auto crossings = jordan_test(curve);
    int transversal = 0;
    for (const CurveCrossing& c : crossings) {
        if (c.grazing) continue;
        ++transversal;
        // phi(e^{2 pi i/3}) = phi(e^{-2 pi i/3}) = -3/4
        CHECK(std::abs(c.point - Complex(-0.75, 0.0)) <= 1e-3);
    }
    CHECK(transversal == 1);
}

TEST_CASE("jordan test: circles and translates have no crossings") {
    CHECK(jordan_test(BoundaryCurve(sym("z"), 4096)).empty());
    CHECK(jordan_test(BoundaryCurve(sym("z+0.5"), 4096)).empty());
}

TEST_CASE("univalence probe") {
    const UnivalenceVerdict cardioid = univalence_probe(sym("(z+0.5)^2"), 16);
    CHECK(cardioid.certified_nonunivalent);
    REQUIRE(cardioid.witness.has_value());
    REQUIRE(cardioid.witness_w.has_value());
    const TaylorSymbol s = sym("(z+0.5)^2");
    // the recovered preimages genuinely collide under phi
    CHECK(std::abs(s.eval(cardioid.witness->first) - *cardioid.witness_w) <= 1e-8);
    CHECK(std::abs(s.eval(cardioid.witness->second) - *cardioid.witness_w) <= 1e-8);

    CHECK_FALSE(univalence_probe(sym("z+0.5"), 16).certified_nonunivalent);
    CHECK(univalence_probe(sym("z^2"), 8).certified_nonunivalent);
}

TEST_CASE("single cover probe") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    const WindingProfile p = winding_profile(cardioid, 16);
    const SingleCoverVerdict v = single_cover_probe(cardioid, p);
    REQUIRE(v.single_covers);
    CHECK(winding_number(cardioid, *v.witness_w) == 1);

    CHECK_FALSE(single_cover_probe(sym("z^2"), winding_profile(sym("z^2"), 8)).single_covers);
    CHECK(single_cover_probe(sym("z"), winding_profile(sym("z"), 8)).single_covers);
}

TEST_CASE("winding equals the multiplicity-weighted interior root count") {
    std::mt19937 rng(20240813);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<int> degree_pick(1, 6);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int degree = degree_pick(rng);
        std::vector<Complex> coeffs;
        for (int k = 0; k <= degree; ++k) coeffs.push_back(Complex(coeff(rng), coeff(rng)));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() += Complex(0.5);
        const TaylorSymbol s{coeffs};
        BoundaryCurve curve(s, 1024);
        for (int t = 0; t < 10; ++t) {
            const Complex w(2.0 * coeff(rng), 2.0 * coeff(rng));
            if (curve.distance_to(w) < 1e-3) continue;
            if (min_root_circle_gap(coeffs, w) < 1e-6) continue;
            INFO("degree " << degree << " target " << w.real() << "," << w.imag());
            CHECK(winding_number(curve, w) == oracle_interior_count(coeffs, w));
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("refinement does not change resolved winding values") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    for (const Complex w : {Complex(0.0), Complex(1.21), Complex(0.1, 0.2)}) {
        BoundaryCurve coarse(cardioid, 256);
        const int before = winding_number(coarse, w);
        BoundaryCurve fine(cardioid, 8192);
        CHECK(winding_number(fine, w) == before);
    }
}

TEST_CASE("winding is locally constant off the curve") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    BoundaryCurve curve(cardioid, 4096);
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> coord(-0.5, 2.0);
    int checked = 0;
    while (checked < 20) {
        const Complex w(coord(rng), coord(rng));
        const double clearance = curve.distance_to(w);
        if (clearance < 1e-2) continue;
        // a target this close to w stays in the same complement component
        const Complex nudged = w + Complex(clearance / 3.0, -clearance / 4.0);
        CHECK(winding_number(curve, w) == winding_number(curve, nudged));
        ++checked;
    }
}

TEST_CASE("far targets have winding zero") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    BoundaryCurve curve(cardioid, 1024);
    double max_node = 0.0;
    for (const Complex& p : curve.nodes()) max_node = std::max(max_node, std::abs(p));
    CHECK(winding_number(curve, Complex(max_node + 1.0, 0.0)) == 0);
    CHECK(winding_number(curve, Complex(0.0, -max_node - 2.0)) == 0);
}
