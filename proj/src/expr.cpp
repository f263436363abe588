#include "toepcomm/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <algorithm>

#include "toepcomm/errors.hpp"
#include "toepcomm/fourier.hpp"
#include "toepcomm/numfmt.hpp"

namespace toepcomm {

ExprPtr SymbolExpr::variable() {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Variable;
    return e;
}

ExprPtr SymbolExpr::lit(Complex value) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Literal;
    e->literal = value;
    return e;
}

ExprPtr SymbolExpr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr SymbolExpr::sub(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Sub;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr SymbolExpr::mul(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Mul;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr SymbolExpr::pow(ExprPtr base, int exponent) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Pow;
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}

ExprPtr SymbolExpr::compose(ExprPtr outer, ExprPtr inner) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Compose;
    e->lhs = std::move(outer);
    e->rhs = std::move(inner);
    return e;
}

ExprPtr SymbolExpr::blaschke(std::vector<Complex> zeros) {
    auto e = std::make_shared<SymbolExpr>();
    e->kind = Kind::Blaschke;
    e->zeros = std::move(zeros);
    return e;
}

bool structurally_equal(const SymbolExpr& a, const SymbolExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case SymbolExpr::Kind::Variable:
            return true;
        case SymbolExpr::Kind::Literal:
            return a.literal == b.literal;
        case SymbolExpr::Kind::Pow:
            return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
        case SymbolExpr::Kind::Blaschke:
            return a.zeros == b.zeros;
        case SymbolExpr::Kind::Add:
        case SymbolExpr::Kind::Sub:
        case SymbolExpr::Kind::Mul:
        case SymbolExpr::Kind::Compose:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
    return false;
}

// ---------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Z,
    Number,   // value in num, imaginary when numImag
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Compose,
    Blaschke,
    End,
};

struct Token {
    Tok kind;
    double num = 0.0;
    bool numImag = false;
    std::size_t pos = 0;  // 1-based position of the first character
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { tokens_ = lex(); }
    const std::vector<Token>& tokens() const { return tokens_; }

  private:
    std::string_view text_;
    std::vector<Token> tokens_;

    [[noreturn]] static void fail(const std::string& msg, std::size_t pos0) {
        throw SyntaxError(msg, pos0 + 1);
    }

    std::vector<Token> lex() {
        std::vector<Token> out;
        std::size_t i = 0;
        const std::size_t n = text_.size();
        while (i < n) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                std::size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                if (j < n && text_[j] == '.') {
                    ++j;
                    while (j < n && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                }
                if (j == i || (j == i + 1 && text_[i] == '.'))
                    fail("malformed number", start);
                if (j < n && (text_[j] == 'e' || text_[j] == 'E')) {
                    std::size_t k = j + 1;
                    if (k < n && (text_[k] == '+' || text_[k] == '-')) ++k;
                    std::size_t digits = k;
                    while (k < n && std::isdigit(static_cast<unsigned char>(text_[k]))) ++k;
                    if (k > digits) j = k;
                }
                const std::string numtext(text_.substr(i, j - i));
                Token t{Tok::Number, std::strtod(numtext.c_str(), nullptr), false, start + 1};
                if (j < n && text_[j] == 'i') {
                    t.numImag = true;
                    ++j;
                }
                out.push_back(t);
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < n && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
                const std::string_view word = text_.substr(i, j - i);
                if (word == "z")
                    out.push_back({Tok::Z, 0.0, false, start + 1});
                else if (word == "compose")
                    out.push_back({Tok::Compose, 0.0, false, start + 1});
                else if (word == "blaschke")
                    out.push_back({Tok::Blaschke, 0.0, false, start + 1});
                else
                    fail("unknown name '" + std::string(word) + "'", start);
                i = j;
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '[': kind = Tok::LBracket; break;
                case ']': kind = Tok::RBracket; break;
                case ',': kind = Tok::Comma; break;
                default: fail(std::string("unexpected character '") + c + "'", start);
            }
            out.push_back({kind, 0.0, false, start + 1});
            ++i;
        }
        out.push_back({Tok::End, 0.0, false, n + 1});
        return out;
    }
};

// ---------------------------------------------------------------------
// Recursive-descent parser

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    ExprPtr parse() {
        ExprPtr e = parseSymbol();
        expect(Tok::End, "trailing input after expression");
        return e;
    }

  private:
    Lexer lexer_;
    std::size_t cursor_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        const auto& toks = lexer_.tokens();
        const std::size_t i = std::min(cursor_ + ahead, toks.size() - 1);
        return toks[i];
    }
    const Token& advance() { return lexer_.tokens()[cursor_++]; }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw SyntaxError(msg, at.pos);
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(what, peek());
        advance();
    }

    ExprPtr parseSymbol() {
        ExprPtr e = parseTerm();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool plus = advance().kind == Tok::Plus;
            ExprPtr rhs = parseTerm();
            e = plus ? SymbolExpr::add(std::move(e), std::move(rhs))
                     : SymbolExpr::sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parseTerm() {
        ExprPtr e = parseFactor();
        while (peek().kind == Tok::Star) {
            advance();
            e = SymbolExpr::mul(std::move(e), parseFactor());
        }
        return e;
    }

    ExprPtr parseFactor() {
        ExprPtr base = parseBase();
        if (peek().kind == Tok::Caret) {
            advance();
            const Token& t = peek();
            if (t.kind != Tok::Number || t.numImag) fail("expected integer exponent", t);
            const double v = t.num;
            if (v < 0.0 || v != std::floor(v) || v > 1e9) fail("expected integer exponent", t);
            advance();
            return SymbolExpr::pow(std::move(base), static_cast<int>(v));
        }
        return base;
    }

    // A complex literal: a, ai, a+bi, a-bi; an optional leading minus is
    // accepted where a base is expected ("z*-0.5" is fine, "z-0.5" still
    // parses the minus as subtraction).
    ExprPtr parseComplexLiteral() {
        double sign = 1.0;
        if (peek().kind == Tok::Minus) {
            advance();
            if (peek().kind != Tok::Number) fail("expected number after '-'", peek());
            sign = -1.0;
        }
        const Token& first = peek();
        advance();
        if (first.numImag) return SymbolExpr::lit(Complex(0.0, sign * first.num));
        const double re = sign * first.num;
        // Greedy a+bi / a-bi: only when the next two tokens are a sign
        // followed by an imaginary number.
        if ((peek().kind == Tok::Plus || peek().kind == Tok::Minus) &&
            peek(1).kind == Tok::Number && peek(1).numImag) {
            const bool plus = advance().kind == Tok::Plus;
            const Token& imag = advance();
            return SymbolExpr::lit(Complex(re, plus ? imag.num : -imag.num));
        }
        return SymbolExpr::lit(Complex(re, 0.0));
    }

    ExprPtr parseBase() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Z:
                advance();
                return SymbolExpr::variable();
            case Tok::Number:
            case Tok::Minus:
                return parseComplexLiteral();
            case Tok::LParen: {
                advance();
                ExprPtr inner = parseSymbol();
                expect(Tok::RParen, "expected ')'");
                return inner;
            }
            case Tok::Blaschke: {
                advance();
                expect(Tok::LBracket, "expected '[' after blaschke");
                std::vector<Complex> zeros;
                zeros.push_back(parseComplexValue());
                while (peek().kind == Tok::Comma) {
                    advance();
                    zeros.push_back(parseComplexValue());
                }
                expect(Tok::RBracket, "expected ']'");
                return SymbolExpr::blaschke(std::move(zeros));
            }
            case Tok::Compose: {
                advance();
                expect(Tok::LParen, "expected '(' after compose");
                ExprPtr outer = parseSymbol();
                expect(Tok::Comma, "expected ',' between compose arguments");
                ExprPtr inner = parseSymbol();
                expect(Tok::RParen, "expected ')'");
                return SymbolExpr::compose(std::move(outer), std::move(inner));
            }
            default:
                fail("expected a symbol", t);
        }
    }

    Complex parseComplexValue() {
        const Token& t = peek();
        if (t.kind != Tok::Number && t.kind != Tok::Minus) fail("expected a complex literal", t);
        return parseComplexLiteral()->literal;
    }
};

// ---------------------------------------------------------------------
// Rendering

int precedence(const SymbolExpr& e) {
    switch (e.kind) {
        case SymbolExpr::Kind::Add:
        case SymbolExpr::Kind::Sub: return 1;
        case SymbolExpr::Kind::Mul: return 2;
        case SymbolExpr::Kind::Pow: return 3;
        default: return 4;
    }
}

std::string renderLiteral(Complex v) {
    const double re = v.real();
    const double im = v.imag();
    if (im == 0.0) return fmt_shortest(re);
    if (re == 0.0) return fmt_shortest(im) + "i";
    return fmt_shortest(re) + (im < 0.0 ? "-" : "+") + fmt_shortest(std::abs(im)) + "i";
}

void renderInto(const SymbolExpr& e, std::string& out);

void renderChild(const SymbolExpr& child, int parent_prec, bool force_parens, std::string& out) {
    bool parens = force_parens || precedence(child) < parent_prec;
    // A literal with both parts (or a bare leading minus) needs parens in
    // any binary context to survive re-lexing.
    if (child.kind == SymbolExpr::Kind::Literal && parent_prec >= 2) {
        const Complex v = child.literal;
        if ((v.real() != 0.0 && v.imag() != 0.0) || v.real() < 0.0 ||
            (v.real() == 0.0 && v.imag() < 0.0))
            parens = true;
    }
    if (parens) out += '(';
    renderInto(child, out);
    if (parens) out += ')';
}

void renderInto(const SymbolExpr& e, std::string& out) {
    switch (e.kind) {
        case SymbolExpr::Kind::Variable:
            out += 'z';
            return;
        case SymbolExpr::Kind::Literal:
            out += renderLiteral(e.literal);
            return;
        case SymbolExpr::Kind::Add:
            renderChild(*e.lhs, 1, false, out);
            out += '+';
            // A literal right operand whose rendering starts with '-' (or
            // is a+bi shaped) must be parenthesized after '+'.
            renderChild(*e.rhs, 2, false, out);
            return;
        case SymbolExpr::Kind::Sub:
            renderChild(*e.lhs, 1, false, out);
            out += '-';
            renderChild(*e.rhs, 2, false, out);
            return;
        case SymbolExpr::Kind::Mul:
            renderChild(*e.lhs, 2, false, out);
            out += '*';
            // a right-nested product needs parens to survive the
            // left-associative reparse
            renderChild(*e.rhs, 3, false, out);
            return;
        case SymbolExpr::Kind::Pow:
            renderChild(*e.lhs, 4, e.lhs->kind == SymbolExpr::Kind::Pow, out);
            out += '^';
            out += std::to_string(e.exponent);
            return;
        case SymbolExpr::Kind::Compose:
            out += "compose(";
            renderInto(*e.lhs, out);
            out += ',';
            renderInto(*e.rhs, out);
            out += ')';
            return;
        case SymbolExpr::Kind::Blaschke:
            out += "blaschke[";
            for (std::size_t i = 0; i < e.zeros.size(); ++i) {
                if (i) out += ',';
                out += renderLiteral(e.zeros[i]);
            }
            out += ']';
            return;
    }
}

}  // namespace

ExprPtr parse_symbol(std::string_view text) { return Parser(text).parse(); }

std::string render(const SymbolExpr& e) {
    std::string out;
    renderInto(e, out);
    return out;
}

Complex eval_expr(const SymbolExpr& e, Complex z) {
    switch (e.kind) {
        case SymbolExpr::Kind::Variable: return z;
        case SymbolExpr::Kind::Literal: return e.literal;
        case SymbolExpr::Kind::Add: return eval_expr(*e.lhs, z) + eval_expr(*e.rhs, z);
        case SymbolExpr::Kind::Sub: return eval_expr(*e.lhs, z) - eval_expr(*e.rhs, z);
        case SymbolExpr::Kind::Mul: return eval_expr(*e.lhs, z) * eval_expr(*e.rhs, z);
        case SymbolExpr::Kind::Pow: {
            Complex acc(1.0);
            Complex base = eval_expr(*e.lhs, z);
            int k = e.exponent;
            while (k > 0) {
                if (k & 1) acc *= base;
                base *= base;
                k >>= 1;
            }
            return acc;
        }
        case SymbolExpr::Kind::Compose:
            return eval_expr(*e.lhs, eval_expr(*e.rhs, z));
        case SymbolExpr::Kind::Blaschke:
            return BlaschkeProduct(e.zeros).eval(z);
    }
    return Complex(0.0);
}

namespace {

constexpr double kComposeRadius = 0.999;

bool is_exact_polynomial_expr(const SymbolExpr& e) {
    switch (e.kind) {
        case SymbolExpr::Kind::Variable:
        case SymbolExpr::Kind::Literal:
            return true;
        case SymbolExpr::Kind::Pow:
            return is_exact_polynomial_expr(*e.lhs);
        case SymbolExpr::Kind::Add:
        case SymbolExpr::Kind::Sub:
        case SymbolExpr::Kind::Mul:
        case SymbolExpr::Kind::Compose:
            return is_exact_polynomial_expr(*e.lhs) && is_exact_polynomial_expr(*e.rhs);
        case SymbolExpr::Kind::Blaschke:
            for (const Complex& a : e.zeros)
                if (a != Complex(0.0)) return false;
            return true;
    }
    return false;
}

// Lower compose(outer, inner) by boundary sampling: values of the whole
// composition at 8N nodes on the circle of radius 0.999, then the
// inverse DFT with coefficient k rescaled by 0.999^{-k}.
TaylorSymbol lower_compose(const SymbolExpr& e, int order) {
    const SymbolExpr& inner = *e.rhs;
    double sup = 0.0;
    const int probe = 1024;
    for (int j = 0; j < probe; ++j) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / probe);
        sup = std::max(sup, std::abs(eval_expr(inner, z)));
    }
    if (sup > 1.0 + 1e-9)
        throw CompositionDomainError(
            "compose inner map leaves the closed disk (sup estimate " + fmt_double(sup) + ")");

    int m = 8 * order;
    // round up to a power of two so the FFT path applies
    int pow2 = 1;
    while (pow2 < m) pow2 <<= 1;
    m = pow2;

    std::vector<Complex> values(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex z = std::polar(kComposeRadius, 2.0 * std::numbers::pi * j / m);
        values[static_cast<std::size_t>(j)] = eval_expr(e, z);
    }
    fft(values, /*invert=*/false);
    std::vector<Complex> coeffs(static_cast<std::size_t>(order) + 1);
    double rk = 1.0;
    for (int k = 0; k <= order; ++k) {
        coeffs[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(k)] / (static_cast<double>(m) * rk);
        rk *= kComposeRadius;
    }
    return TaylorSymbol(std::move(coeffs), "", is_exact_polynomial_expr(e));
}

TaylorSymbol lower_node(const SymbolExpr& e, int order) {
    switch (e.kind) {
        case SymbolExpr::Kind::Variable: {
            std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(0.0));
            c[1] = Complex(1.0);
            return TaylorSymbol(std::move(c), "", true);
        }
        case SymbolExpr::Kind::Literal: {
            std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(0.0));
            c[0] = e.literal;
            return TaylorSymbol(std::move(c), "", true);
        }
        case SymbolExpr::Kind::Add:
            return add(lower_node(*e.lhs, order), lower_node(*e.rhs, order));
        case SymbolExpr::Kind::Sub:
            return sub(lower_node(*e.lhs, order), lower_node(*e.rhs, order));
        case SymbolExpr::Kind::Mul:
            return mul_truncated(lower_node(*e.lhs, order), lower_node(*e.rhs, order), order);
        case SymbolExpr::Kind::Pow:
            return pow_truncated(lower_node(*e.lhs, order), e.exponent, order);
        case SymbolExpr::Kind::Compose:
            return lower_compose(e, order);
        case SymbolExpr::Kind::Blaschke:
            return blaschke_to_taylor(BlaschkeProduct(e.zeros), order);
    }
    throw PreconditionError("unreachable expression kind");
}

}  // namespace

TaylorSymbol lower(const SymbolExpr& e, int order, std::string label) {
    if (order < 1) throw PreconditionError("truncation order must be at least 1");
    if (order > kMaxTruncationOrder)
        throw PreconditionError("truncation order exceeds the cap of " +
                                std::to_string(kMaxTruncationOrder));
    TaylorSymbol s = lower_node(e, order);
    // pad to the requested order (children may return shorter sums)
    std::vector<Complex> c = s.coeffs();
    c.resize(static_cast<std::size_t>(order) + 1, Complex(0.0));
    TaylorSymbol out(std::move(c), label.empty() ? render(e) : std::move(label),
                     s.exact_polynomial());
    return out;
}

TaylorSymbol lower_dsl(std::string_view text, int order, std::string label) {
    return lower(*parse_symbol(text), order, std::move(label));
}

}  // namespace toepcomm
