#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "toepcomm/errors.hpp"
#include "toepcomm/expr.hpp"
#include "toepcomm/serialize.hpp"
#include "toepcomm/symbol.hpp"

using namespace toepcomm;

namespace {

TaylorSymbol sym(const std::string& dsl, int order = 32) { return lower_dsl(dsl, order); }

}  // namespace

TEST_CASE("parser produces the expected trees") {
    const ExprPtr cardioid = parse_symbol("(z+0.5)^2");
    REQUIRE(cardioid->kind == SymbolExpr::Kind::Pow);
    CHECK(cardioid->exponent == 2);
    REQUIRE(cardioid->lhs->kind == SymbolExpr::Kind::Add);
    CHECK(cardioid->lhs->lhs->kind == SymbolExpr::Kind::Variable);
    CHECK(cardioid->lhs->rhs->kind == SymbolExpr::Kind::Literal);
    CHECK(cardioid->lhs->rhs->literal == Complex(0.5, 0.0));

    const ExprPtr comp = parse_symbol("compose(z^2, blaschke[0.5])");
    REQUIRE(comp->kind == SymbolExpr::Kind::Compose);
    CHECK(comp->lhs->kind == SymbolExpr::Kind::Pow);
    REQUIRE(comp->rhs->kind == SymbolExpr::Kind::Blaschke);
    CHECK(comp->rhs->zeros == std::vector<Complex>{Complex(0.5, 0.0)});
}

TEST_CASE("parser is whitespace insensitive") {
    CHECK(structurally_equal(*parse_symbol("( z + 0.5 ) ^ 2"), *parse_symbol("(z+0.5)^2")));
}

TEST_CASE("syntax errors carry 1-based positions") {
    try {
        parse_symbol("z^^2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 3);
    }
    try {
        parse_symbol("z+");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_symbol("foo"), SyntaxError);
    CHECK_THROWS_AS(parse_symbol("blaschke[]"), SyntaxError);
    CHECK_THROWS_AS(parse_symbol("compose(z)"), SyntaxError);
    CHECK_THROWS_AS(parse_symbol("z^2 trailing"), SyntaxError);
}

TEST_CASE("complex literals: a, ai, a+bi, a-bi") {
    CHECK(parse_symbol("2.5")->literal == Complex(2.5, 0.0));
    CHECK(parse_symbol("2i")->literal == Complex(0.0, 2.0));
    CHECK(parse_symbol("1+2i")->literal == Complex(1.0, 2.0));
    CHECK(parse_symbol("1-2i")->literal == Complex(1.0, -2.0));
    // greedy literal before multiplication: '-' after z stays subtraction
    const ExprPtr diff = parse_symbol("z-0.5");
    CHECK(diff->kind == SymbolExpr::Kind::Sub);
    CHECK(diff->rhs->literal == Complex(0.5, 0.0));
}

TEST_CASE("render/parse round trip on random trees") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> real(-2.0, 2.0);
    std::uniform_int_distribution<int> pick(0, 7);

    std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
        const int kind = depth <= 0 ? pick(rng) % 2 : pick(rng);
        switch (kind) {
            case 0: return SymbolExpr::variable();
            case 1: {
                // mix pure real, pure imaginary, and full literals
                const int mode = pick(rng) % 3;
                const double a = real(rng);
                const double b = real(rng);
                if (mode == 0) return SymbolExpr::lit(Complex(a, 0.0));
                if (mode == 1) return SymbolExpr::lit(Complex(0.0, b));
                return SymbolExpr::lit(Complex(a, b));
            }
            case 2: return SymbolExpr::add(gen(depth - 1), gen(depth - 1));
            case 3: return SymbolExpr::sub(gen(depth - 1), gen(depth - 1));
            case 4: return SymbolExpr::mul(gen(depth - 1), gen(depth - 1));
            case 5: return SymbolExpr::pow(gen(depth - 1), 1 + pick(rng) % 5);
            case 6: return SymbolExpr::compose(gen(depth - 1), gen(depth - 1));
            default: {
                std::vector<Complex> zeros;
                const int count = 1 + pick(rng) % 3;
                for (int i = 0; i < count; ++i)
                    zeros.push_back(Complex(real(rng) / 4.0, real(rng) / 4.0));
                return SymbolExpr::blaschke(std::move(zeros));
            }
        }
    };

    for (int trial = 0; trial < 200; ++trial) {
        const ExprPtr e = gen(3);
        const std::string text = render(*e);
        INFO("rendered: " << text);
        CHECK(structurally_equal(*parse_symbol(text), *e));
    }
}

TEST_CASE("lower: cardioid binomial expansion") {
    const TaylorSymbol s = lower_dsl("(z+0.5)^2", 4);
    REQUIRE(s.order() == 4);
    CHECK(s.coeff(0) == Complex(0.25));
    CHECK(s.coeff(1) == Complex(1.0));
    CHECK(s.coeff(2) == Complex(1.0));
    CHECK(s.coeff(3) == Complex(0.0));
    CHECK(s.coeff(4) == Complex(0.0));
}

TEST_CASE("lower: pure power") {
    const TaylorSymbol s = lower_dsl("z^6", 8);
    for (int k = 0; k <= 8; ++k) CHECK(s.coeff(k) == (k == 6 ? Complex(1.0) : Complex(0.0)));
}

TEST_CASE("lower: compose by circle sampling matches direct expansion") {
    const TaylorSymbol sampled = lower_dsl("compose(z^2, z^3)", 8);
    const TaylorSymbol direct = lower_dsl("z^6", 8);
    for (int k = 0; k <= 8; ++k) CHECK(std::abs(sampled.coeff(k) - direct.coeff(k)) <= 1e-9);
    CHECK(std::abs(sampled.coeff(6) - Complex(1.0)) <= 1e-9);
}

TEST_CASE("compose rejects inner maps leaving the disk") {
    CHECK_THROWS_AS(lower_dsl("compose(z, z+0.5)", 16), CompositionDomainError);
    CHECK_NOTHROW(lower_dsl("compose(z+0.5, z)", 16));
}

TEST_CASE("eval: Horner on the truncated series") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    CHECK(cardioid.eval(Complex(0.0)) == Complex(0.25));
    CHECK(std::abs(cardioid.eval(Complex(-0.5))) == 0.0);
    const TaylorSymbol identity = sym("z");
    CHECK(identity.eval(Complex(0.3, 0.4)) == Complex(0.3, 0.4));
}

TEST_CASE("eval_circle: fourth roots of unity") {
    const std::vector<Complex> zvals = sym("z", 2).eval_circle(4, 1.0);
    CHECK(std::abs(zvals[0] - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(zvals[1] - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(zvals[2] - Complex(-1, 0)) < 1e-14);
    CHECK(std::abs(zvals[3] - Complex(0, -1)) < 1e-14);

    const std::vector<Complex> z2vals = sym("z^2", 2).eval_circle(4, 1.0);
    CHECK(std::abs(z2vals[0] - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(z2vals[1] - Complex(-1, 0)) < 1e-14);
    CHECK(std::abs(z2vals[2] - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(z2vals[3] - Complex(-1, 0)) < 1e-14);
}

TEST_CASE("eval_circle agrees with pointwise Horner") {
    const TaylorSymbol cardioid = sym("(z+0.5)^2");
    const int m = 4096;
    const std::vector<Complex> values = cardioid.eval_circle(m, 1.0);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> node(0, m - 1);
    for (int t = 0; t < 16; ++t) {
        const int j = node(rng);
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
        const Complex direct = cardioid.eval(z);
        CHECK(std::abs(values[static_cast<std::size_t>(j)] - direct) <=
              1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("eval_circle requires at least 2N nodes") {
    CHECK_THROWS_AS(sym("z", 200).eval_circle(256, 1.0), ResolutionError);
}

TEST_CASE("derivative shifts and scales coefficients") {
    const TaylorSymbol s(std::vector<Complex>{Complex(0.25), Complex(1.0), Complex(1.0)});
    const TaylorSymbol d = s.derivative();
    REQUIRE(d.order() == 1);
    CHECK(d.coeff(0) == Complex(1.0));
    CHECK(d.coeff(1) == Complex(2.0));

    const TaylorSymbol constant(std::vector<Complex>{Complex(3.0)});
    const TaylorSymbol dc = constant.derivative();
    CHECK(dc.order() == 0);
    CHECK(dc.coeff(0) == Complex(0.0));

    const TaylorSymbol z6 = sym("z^6", 8).derivative();
    CHECK(z6.coeff(5) == Complex(6.0));
    CHECK(z6.effective_degree() == 5);
}

TEST_CASE("derivative of antiderivative is the identity on coefficients") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> real(-1.0, 1.0);
    std::vector<Complex> coeffs;
    for (int k = 0; k <= 12; ++k) coeffs.push_back(Complex(real(rng), real(rng)));
    const TaylorSymbol s{coeffs};
    const TaylorSymbol round = antiderivative(s).derivative();
    for (int k = 0; k <= s.order(); ++k) CHECK(std::abs(round.coeff(k) - s.coeff(k)) <= 1e-15);
}

TEST_CASE("blaschke_to_taylor: shifts for zeros at the origin") {
    const TaylorSymbol b1 = blaschke_to_taylor(BlaschkeProduct({Complex(0.0)}), 4);
    CHECK(b1.coeff(0) == Complex(0.0));
    CHECK(b1.coeff(1) == Complex(1.0));
    CHECK(b1.effective_degree() == 1);

    const TaylorSymbol b2 = blaschke_to_taylor(BlaschkeProduct({Complex(0.0), Complex(0.0)}), 4);
    CHECK(b2.coeff(2) == Complex(1.0));
    CHECK(b2.effective_degree() == 2);
}

TEST_CASE("blaschke truncation stays unimodular on the circle") {
    const TaylorSymbol b = blaschke_to_taylor(BlaschkeProduct({Complex(0.5)}), 64);
    for (int j = 0; j < 256; ++j) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 256);
        CHECK(std::abs(std::abs(b.eval(z)) - 1.0) <= 1e-10);
    }
}

TEST_CASE("blaschke products are unimodular on the boundary and vanish at their zeros") {
    std::mt19937 rng(20240812);
    std::uniform_real_distribution<double> radius(0.0, 0.9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Complex> zeros;
        const int order = 1 + trial % 5;
        for (int i = 0; i < order; ++i) zeros.push_back(std::polar(radius(rng), angle(rng)));
        const BlaschkeProduct b(zeros);
        double worst = 0.0;
        for (int j = 0; j < 1024; ++j) {
            const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 1024);
            worst = std::max(worst, std::abs(std::abs(b.eval(z)) - 1.0));
        }
        CHECK(worst <= 1e-10);
        for (const Complex& a : zeros) CHECK(std::abs(b.eval(a)) <= 1e-12);
    }
}

TEST_CASE("lowering agrees with recursive tree evaluation inside the disk") {
    const std::vector<std::string> exprs = {
        "(z+0.5)^2",
        "z^6",
        "z^2+z^4",
        "blaschke[0.5,-0.3+0.2i]",
        "compose(z^2, blaschke[0.5])",
        "compose(z+0.25, z^2)*blaschke[0.1]",
        "(1-2i)*z^3+0.5*z-0.25",
    };
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> radius(0.0, 0.9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (const std::string& text : exprs) {
        const ExprPtr e = parse_symbol(text);
        const TaylorSymbol s = lower(*e, 256);
        for (int t = 0; t < 100; ++t) {
            const Complex z = std::polar(radius(rng), angle(rng));
            INFO(text);
            CHECK(std::abs(s.eval(z) - eval_expr(*e, z)) <= 1e-8);
        }
    }
}

TEST_CASE("lowering is additive") {
    const ExprPtr e1 = parse_symbol("(z+0.5)^2");
    const ExprPtr e2 = parse_symbol("blaschke[0.25]*z");
    const TaylorSymbol sum = lower(*SymbolExpr::add(e1, e2), 64);
    const TaylorSymbol split = add(lower(*e1, 64), lower(*e2, 64));
    for (int k = 0; k <= 64; ++k) CHECK(std::abs(sum.coeff(k) - split.coeff(k)) <= 1e-12);
}

TEST_CASE("symbol JSON round trip") {
    const TaylorSymbol s = sym("(z+0.5)^2", 8);
    const TaylorSymbol back = symbol_from_json(symbol_to_json(s));
    CHECK(back.order() == s.order());
    CHECK(back.label() == s.label());
    for (int k = 0; k <= s.order(); ++k) CHECK(back.coeff(k) == s.coeff(k));
}
