#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "poizat/bivariate.hpp"
#include "poizat/ratfunc.hpp"

namespace poizat {

/**
 * Syntax tree for rational-function expressions.
 *
 * Grammar, loosest binding first:
 *   sum     := product (('+' | '-') product)*
 *   product := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := atom ('^' exponent)?
 *   atom    := integer | identifier | '(' sum ')'
 * Exponents are nonnegative integer literals, optionally parenthesized.
 * Juxtaposition ("2z") is rejected.
 */
struct Expr {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Number;
    Rational number;
    std::string name;
    long exponent = 0;
    int line = 1;
    int column = 1;
    std::vector<Expr> args;
};

Expr parse_expr(const std::string& text);
std::set<std::string> symbols_of(const Expr& e);

template <class T>
T power(const T& base, long e) {
    T r = T(Rational(1)), b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

// Folds the tree into T. symbol() receives each identifier with its node.
template <class T>
T evaluate(const Expr& e, const std::function<T(const Expr&)>& symbol) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return T(e.number);
        case Expr::Kind::Symbol:
            return symbol(e);
        case Expr::Kind::Neg:
            return -evaluate<T>(e.args[0], symbol);
        case Expr::Kind::Add:
            return evaluate<T>(e.args[0], symbol) + evaluate<T>(e.args[1], symbol);
        case Expr::Kind::Sub:
            return evaluate<T>(e.args[0], symbol) - evaluate<T>(e.args[1], symbol);
        case Expr::Kind::Mul:
            return evaluate<T>(e.args[0], symbol) * evaluate<T>(e.args[1], symbol);
        case Expr::Kind::Div: {
            T d = evaluate<T>(e.args[1], symbol);
            if (is_zero(d)) throw ParseError("division by zero", e.line, e.column);
            return evaluate<T>(e.args[0], symbol) / d;
        }
        case Expr::Kind::Pow:
            return power(evaluate<T>(e.args[0], symbol), e.exponent);
    }
    throw ParseError("malformed expression");
}

// f(var); the parameter symbol c is rejected.
RatFunc<Rational> parse_univariate(const std::string& text, const std::string& var = "z");
// f(z) with coefficients in Q(c).
RatFunc<ParamField> parse_parametric(const std::string& text);
// f(x, y).
BiRatFunc parse_planar(const std::string& text);
// Rational constant expression.
Rational parse_constant(const std::string& text);

// Family of functions of `variable` depending on free parameters.
struct Family {
    Expr expr;
    std::string variable;
    std::vector<std::string> parameters;  // sorted
};
Family parse_family(const std::string& text, const std::string& variable);
// Substitutes parameter values; throws ParseError on a missing value or zero divisor.
RatFunc<Rational> instantiate(const Family& fam, const std::map<std::string, Rational>& values);

std::string format(const RatFunc<Rational>& f, const std::string& var = "z");
std::string format(const RatFunc<ParamField>& f);
std::string format(const BiRatFunc& f);

}  // namespace poizat
