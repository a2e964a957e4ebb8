#ifndef CREMFOL_PARSER_HPP
#define CREMFOL_PARSER_HPP

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "forms.hpp"
#include "mpoly.hpp"
#include "ratmap.hpp"

namespace cremfol {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Expression tree over rationals, symbols, +, -, *, ^ and parentheses.
/// Powers are nonnegative integer literals; a tree evaluates to one MPoly.
struct Ast {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Pow };
    Kind kind;
    Rational value;               // Number
    std::string symbol;           // Symbol
    unsigned int exponent = 0;    // Pow
    std::vector<Ast> children;    // Add/Sub/Mul: two, Pow: one
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& src) : src_(src) {}

    Ast parse() {
        skip_ws();
        if (eof()) throw ParseError(pos_, "empty expression");
        Ast e = expr();
        skip_ws();
        if (!eof()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    Ast expr() {
        Ast left = term();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = take();
                Ast right = term();
                Ast node;
                node.kind = op == '+' ? Ast::Kind::Add : Ast::Kind::Sub;
                node.children = {std::move(left), std::move(right)};
                left = std::move(node);
            } else {
                return left;
            }
        }
    }

    Ast term() {
        Ast left = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                take();
                Ast right = factor();
                Ast node;
                node.kind = Ast::Kind::Mul;
                node.children = {std::move(left), std::move(right)};
                left = std::move(node);
            } else if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(') {
                throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
            } else {
                return left;
            }
        }
    }

    Ast factor() {
        Ast b = base();
        skip_ws();
        if (peek() == '^') {
            std::size_t at = pos_;
            take();
            skip_ws();
            if (peek() == '-') throw ParseError(pos_, "negative exponent");
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected a nonnegative integer exponent");
            std::string digits = read_digits();
            skip_ws();
            if (peek() == '/') throw ParseError(pos_, "fractional exponent");
            unsigned long e = 0;
            try {
                e = std::stoul(digits);
            } catch (const std::exception&) {
                throw ParseError(at, "exponent out of range");
            }
            Ast node;
            node.kind = Ast::Kind::Pow;
            node.exponent = (unsigned int)e;
            node.children = {std::move(b)};
            return node;
        }
        return b;
    }

    Ast base() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            take();
            Ast inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            take();
            return inner;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational_literal(at);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            Ast node;
            node.kind = Ast::Kind::Symbol;
            node.symbol = read_symbol();
            return node;
        }
        throw ParseError(at, eof() ? "unexpected end of input" : "unexpected character");
    }

    Ast rational_literal(std::size_t at) {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected digits after '-'");
        }
        std::string num = read_digits();
        std::string den;
        if (peek() == '/') {
            take();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected a positive denominator");
            den = read_digits();
        }
        Ast node;
        node.kind = Ast::Kind::Number;
        std::string text = (negative ? "-" : "") + num + (den.empty() ? "" : "/" + den);
        try {
            node.value = rational_from_string(text);
        } catch (const std::exception&) {
            throw ParseError(at, "malformed rational literal");
        }
        return node;
    }

    std::string read_digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        return out;
    }

    std::string read_symbol() {
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') out += take();
        return out;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return eof() ? '\0' : src_[pos_]; }
    char take() { return src_[pos_++]; }

    const std::string& src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Ast parse_expression(const std::string& src) { return detail::ExprParser(src).parse(); }

inline MPoly evaluate(const Ast& ast, const SymbolTablePtr& table) {
    switch (ast.kind) {
        case Ast::Kind::Number: return MPoly::constant(table, ast.value);
        case Ast::Kind::Symbol:
            if (!table->contains(ast.symbol))
                throw std::invalid_argument("undeclared symbol: " + ast.symbol);
            return MPoly::variable(table, ast.symbol);
        case Ast::Kind::Add: return evaluate(ast.children[0], table) + evaluate(ast.children[1], table);
        case Ast::Kind::Sub: return evaluate(ast.children[0], table) - evaluate(ast.children[1], table);
        case Ast::Kind::Mul: return evaluate(ast.children[0], table) * evaluate(ast.children[1], table);
        case Ast::Kind::Pow: return evaluate(ast.children[0], table).pow(ast.exponent);
    }
    throw std::logic_error("unreachable AST kind");
}

inline MPoly parse_poly(const std::string& src, const SymbolTablePtr& table) {
    return evaluate(parse_expression(src), table);
}

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& body, char sep,
                                                std::size_t base_pos) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (depth < 0) throw ParseError(base_pos + i, "unbalanced brackets");
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (depth != 0) throw ParseError(base_pos + body.size(), "unbalanced brackets");
    parts.push_back(current);
    return parts;
}

/// Coefficient with an optional top-level "num / (den)" split.
inline RationalFn parse_coefficient(const std::string& src, const SymbolTablePtr& table) {
    int depth = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            // a '/' belonging to a rational literal is preceded by a digit
            std::size_t j = i;
            while (j > 0 && std::isspace(static_cast<unsigned char>(src[j - 1]))) --j;
            if (j > 0 && std::isdigit(static_cast<unsigned char>(src[j - 1]))) continue;
            MPoly num = parse_poly(src.substr(0, i), table);
            MPoly den = parse_poly(src.substr(i + 1), table);
            return RationalFn(num, den);
        }
    }
    return RationalFn::of(parse_poly(src, table));
}

}  // namespace detail

/// Projective form literal "[A, B, C]" (coefficients of dX, dY, dZ).
inline Proj1Form parse_proj_form(const std::string& src, const SymbolTablePtr& table) {
    std::size_t open = src.find('[');
    std::size_t close = src.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError(0, "expected a projective form literal [A, B, C]");
    auto parts = detail::split_top_level(src.substr(open + 1, close - open - 1), ',', open + 1);
    if (parts.size() != 3) throw ParseError(open, "expected three comma-separated coefficients");
    return Proj1Form(parse_poly(parts[0], table), parse_poly(parts[1], table),
                     parse_poly(parts[2], table));
}

/// Affine form literal "{a, b}" (coefficients of dx, dy).
inline Aff1Form parse_aff_form(const std::string& src, const SymbolTablePtr& table) {
    std::size_t open = src.find('{');
    std::size_t close = src.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError(0, "expected an affine form literal {a, b}");
    auto parts = detail::split_top_level(src.substr(open + 1, close - open - 1), ',', open + 1);
    if (parts.size() != 2) throw ParseError(open, "expected two comma-separated coefficients");
    return Aff1Form(detail::parse_coefficient(parts[0], table),
                    detail::parse_coefficient(parts[1], table));
}

/// Map literal "(e0 : e1 : e2)".
inline RatMap parse_map_literal(const std::string& src, const SymbolTablePtr& table) {
    std::size_t open = src.find('(');
    std::size_t close = src.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError(0, "expected a map literal (e0 : e1 : e2)");
    auto parts = detail::split_top_level(src.substr(open + 1, close - open - 1), ':', open + 1);
    if (parts.size() != 3) throw ParseError(open, "expected three colon-separated components");
    return RatMap(parse_poly(parts[0], table), parse_poly(parts[1], table),
                  parse_poly(parts[2], table));
}

}  // namespace cremfol

#endif
