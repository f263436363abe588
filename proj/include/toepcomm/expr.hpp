#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "toepcomm/symbol.hpp"

namespace toepcomm {

// Expression tree for the symbol DSL:
//
//   symbol := term (("+"|"-") term)* ;
//   term   := factor ("*" factor)* ;
//   factor := base ("^" natural)? ;
//   base   := "z" | complex | "(" symbol ")"
//           | "blaschke" "[" complex ("," complex)* "]"
//           | "compose" "(" symbol "," symbol ")" ;
//
// Complex literals are written a, ai, a+bi, a-bi with decimal reals; a
// literal may carry a leading minus sign where a base is expected.
struct SymbolExpr;
using ExprPtr = std::shared_ptr<const SymbolExpr>;

struct SymbolExpr {
    enum class Kind { Variable, Literal, Add, Sub, Mul, Pow, Compose, Blaschke };

    Kind kind;
    Complex literal;              // Literal
    int exponent = 0;             // Pow
    ExprPtr lhs, rhs;             // Add/Sub/Mul children; Pow base in lhs;
                                  // Compose outer in lhs, inner in rhs
    std::vector<Complex> zeros;   // Blaschke

    static ExprPtr variable();
    static ExprPtr lit(Complex value);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr base, int exponent);
    static ExprPtr compose(ExprPtr outer, ExprPtr inner);
    static ExprPtr blaschke(std::vector<Complex> zeros);
};

bool structurally_equal(const SymbolExpr& a, const SymbolExpr& b);

// Throws SyntaxError (with 1-based character position) on malformed
// input. Whitespace between tokens is ignored.
ExprPtr parse_symbol(std::string_view text);

// Canonical textual form; parse_symbol(render(e)) is structurally equal
// to e.
std::string render(const SymbolExpr& e);

// Exact recursive evaluation of the tree (no truncation).
Complex eval_expr(const SymbolExpr& e, Complex z);

// Truncated Taylor coefficients of the expression at degree `order`.
// Plain arithmetic nodes are expanded exactly by coefficient arithmetic;
// compose(outer, inner) is lowered by sampling outer(inner(.)) on the
// circle of radius 0.999 at 8*order nodes and inverting the DFT, with
// coefficient k divided by 0.999^k. Throws CompositionDomainError when
// the inner map's sup norm on the boundary grid exceeds 1 + 1e-9.
TaylorSymbol lower(const SymbolExpr& e, int order, std::string label = "");

// Convenience: parse + lower; the label defaults to the canonical
// rendering of the parsed expression.
TaylorSymbol lower_dsl(std::string_view text, int order, std::string label = "");

}  // namespace toepcomm
