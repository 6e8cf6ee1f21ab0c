#include "poizat/expr.hpp"

#include <cctype>

namespace poizat {

namespace {

constexpr long kMaxExponent = 4096;

struct Token {
    enum class Type { Number, Ident, Op, End } type;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        const int l = line, c = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '.') throw ParseError("decimal literals are not supported", l, c);
            out.push_back({Token::Type::Number, s.substr(i, j - i), l, c});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Type::Ident, s.substr(i, j - i), l, c});
            advance(j - i);
        } else if (std::string("+-*/^()").find(ch) != std::string::npos) {
            out.push_back({Token::Type::Op, std::string(1, ch), l, c});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
    }
    out.push_back({Token::Type::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Expr parse() {
        if (peek().type == Token::Type::End) throw ParseError("empty expression", peek().line, peek().column);
        Expr e = sum();
        const Token& n = peek();
        if (n.type != Token::Type::End) {
            if (n.type == Token::Type::Number || n.type == Token::Type::Ident || n.text == "(")
                throw ParseError("implicit multiplication is not allowed; use '*'", n.line, n.column);
            throw ParseError("unexpected '" + n.text + "'", n.line, n.column);
        }
        return e;
    }

private:
    const Token& peek() const { return t_[pos_]; }
    const Token& next() { return t_[pos_++]; }
    bool is_op(const char* op) const { return peek().type == Token::Type::Op && peek().text == op; }

    static Expr node(Expr::Kind k, const Token& at, std::vector<Expr> args) {
        Expr e;
        e.kind = k;
        e.line = at.line;
        e.column = at.column;
        e.args = std::move(args);
        return e;
    }

    Expr sum() {
        Expr lhs = product();
        while (is_op("+") || is_op("-")) {
            const Token& op = next();
            Expr rhs = product();
            lhs = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr product() {
        Expr lhs = unary();
        while (is_op("*") || is_op("/")) {
            const Token& op = next();
            Expr rhs = unary();
            lhs = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr unary() {
        if (is_op("-")) {
            const Token& op = next();
            return node(Expr::Kind::Neg, op, {unary()});
        }
        if (is_op("+")) {
            const Token& op = next();
            throw ParseError("unary '+' is not allowed", op.line, op.column);
        }
        return power();
    }

    long exponent() {
        bool paren = false;
        if (is_op("(")) {
            next();
            paren = true;
        }
        const Token& tok = peek();
        if (tok.type == Token::Type::Op && tok.text == "-")
            throw ParseError("negative exponents are not allowed", tok.line, tok.column);
        if (tok.type == Token::Type::Ident)
            throw ParseError("exponent must be a nonnegative integer literal", tok.line, tok.column);
        if (tok.type != Token::Type::Number) throw ParseError("expected an integer exponent", tok.line, tok.column);
        next();
        if (tok.text.size() > 6 || std::stol(tok.text) > kMaxExponent)
            throw ParseError("exponent too large", tok.line, tok.column);
        long e = std::stol(tok.text);
        if (paren) {
            if (!is_op(")")) throw ParseError("expected ')'", peek().line, peek().column);
            next();
        }
        return e;
    }

    Expr power() {
        Expr base = atom();
        if (is_op("^")) {
            const Token& op = next();
            long e = exponent();
            Expr p = node(Expr::Kind::Pow, op, {std::move(base)});
            p.exponent = e;
            if (is_op("^")) throw ParseError("chained exponents need parentheses", peek().line, peek().column);
            return p;
        }
        return base;
    }

    Expr atom() {
        const Token& tok = peek();
        if (tok.type == Token::Type::Number) {
            next();
            Expr e = node(Expr::Kind::Number, tok, {});
            e.number = parse_rational(tok.text);
            return e;
        }
        if (tok.type == Token::Type::Ident) {
            next();
            Expr e = node(Expr::Kind::Symbol, tok, {});
            e.name = tok.text;
            return e;
        }
        if (is_op("(")) {
            next();
            Expr e = sum();
            if (!is_op(")")) throw ParseError("expected ')'", peek().line, peek().column);
            next();
            return e;
        }
        if (tok.type == Token::Type::End) throw ParseError("unexpected end of input", tok.line, tok.column);
        throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column);
    }

    std::vector<Token> t_;
    size_t pos_ = 0;
};

void collect_symbols(const Expr& e, std::set<std::string>& out) {
    if (e.kind == Expr::Kind::Symbol) out.insert(e.name);
    for (const auto& a : e.args) collect_symbols(a, out);
}

[[noreturn]] void unknown_symbol(const Expr& s, const std::string& allowed) {
    if (s.name == "c")
        throw ParseError("the parameter c is only allowed in parametric mode", s.line, s.column);
    throw ParseError("unknown symbol '" + s.name + "' (expected " + allowed + ")", s.line, s.column);
}

template <class T>
T eval_or_rethrow(const Expr& e, const std::function<T(const Expr&)>& sym) {
    try {
        return evaluate<T>(e, sym);
    } catch (const AlgebraError& err) {
        throw ParseError(err.what(), e.line, e.column);
    }
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(tokenize(text)).parse(); }

std::set<std::string> symbols_of(const Expr& e) {
    std::set<std::string> out;
    collect_symbols(e, out);
    return out;
}

RatFunc<Rational> parse_univariate(const std::string& text, const std::string& var) {
    using T = RatFunc<Rational>;
    Expr e = parse_expr(text);
    std::function<T(const Expr&)> sym = [&](const Expr& s) -> T {
        if (s.name == var) return T::variable();
        unknown_symbol(s, "'" + var + "'");
    };
    return eval_or_rethrow<T>(e, sym);
}

RatFunc<ParamField> parse_parametric(const std::string& text) {
    using T = RatFunc<ParamField>;
    Expr e = parse_expr(text);
    std::function<T(const Expr&)> sym = [&](const Expr& s) -> T {
        if (s.name == "z") return T::variable();
        if (s.name == "c") return T(ParamField::c());
        throw ParseError("unknown symbol '" + s.name + "' (expected 'z' or 'c')", s.line, s.column);
    };
    return eval_or_rethrow<T>(e, sym);
}

BiRatFunc parse_planar(const std::string& text) {
    Expr e = parse_expr(text);
    std::function<BiRatFunc(const Expr&)> sym = [&](const Expr& s) -> BiRatFunc {
        if (s.name == "x") return BiRatFunc::x();
        if (s.name == "y") return BiRatFunc::y();
        unknown_symbol(s, "'x' or 'y'");
    };
    return eval_or_rethrow<BiRatFunc>(e, sym);
}

Rational parse_constant(const std::string& text) {
    Expr e = parse_expr(text);
    std::function<Rational(const Expr&)> sym = [&](const Expr& s) -> Rational {
        throw ParseError("unexpected symbol '" + s.name + "' in a constant", s.line, s.column);
    };
    return eval_or_rethrow<Rational>(e, sym);
}

Family parse_family(const std::string& text, const std::string& variable) {
    Family fam{parse_expr(text), variable, {}};
    for (const auto& s : symbols_of(fam.expr))
        if (s != variable) fam.parameters.push_back(s);
    return fam;
}

RatFunc<Rational> instantiate(const Family& fam, const std::map<std::string, Rational>& values) {
    using T = RatFunc<Rational>;
    std::function<T(const Expr&)> sym = [&](const Expr& s) -> T {
        if (s.name == fam.variable) return T::variable();
        auto it = values.find(s.name);
        if (it == values.end()) throw ParseError("no value for parameter '" + s.name + "'", s.line, s.column);
        return T(it->second);
    };
    return eval_or_rethrow<T>(fam.expr, sym);
}

std::string format(const RatFunc<Rational>& f, const std::string& var) { return to_string(f, var); }
std::string format(const RatFunc<ParamField>& f) { return to_string(f, "z"); }
std::string format(const BiRatFunc& f) { return to_string(f); }

}  // namespace poizat
