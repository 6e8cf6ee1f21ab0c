#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "poizat/poly.hpp"

namespace poizat {

// Q[x][y]: outer variable y, coefficients in Q[x].
using UPoly = Poly<Rational>;
using BiPoly = Poly<UPoly>;

BiPoly bi_x();
BiPoly bi_y();
BiPoly bi_const(const Rational& c);
BiPoly bi_monomial(const Rational& c, int i, int j);  // c x^i y^j
BiPoly bi_from_x(const UPoly& p);                     // p(x)

Rational bi_coeff(const BiPoly& p, int i, int j);
int total_degree(const BiPoly& p);
BiPoly homogeneous_part(const BiPoly& p, int d);
BiPoly bi_dx(const BiPoly& p);
BiPoly bi_dy(const BiPoly& p);
BiPoly bi_scale(const BiPoly& p, const Rational& c);
Rational bi_eval(const BiPoly& p, const Rational& x, const Rational& y);

// Monomials of p as (i, j, coefficient) for x^i y^j.
std::vector<std::tuple<int, int, Rational>> bi_terms(const BiPoly& p);
// Leading coefficient in graded lex order (total degree, then power of x).
Rational bi_grlex_lc(const BiPoly& p);

UPoly content_x(const BiPoly& p);
BiPoly primitive_part_x(const BiPoly& p);
// Exact quotient; throws AlgebraError when b does not divide a.
BiPoly bi_exact_div(const BiPoly& a, const BiPoly& b);
bool bi_divides(const BiPoly& b, const BiPoly& a);
// gcd normalized so its leading coefficient (in y, then in x) is 1.
BiPoly bi_gcd(const BiPoly& a, const BiPoly& b);

struct BiFactorization {
    Rational unit;
    std::vector<std::pair<BiPoly, int>> factors;
};

// Irreducible factors over Q, each with leading coefficient (in y, then x) 1.
BiFactorization bi_factor(const BiPoly& p);

std::string to_string(const BiPoly& p);

/**
 * Reduced fraction of bivariate polynomials. The denominator is normalized
 * so its leading coefficient in y, then in x, equals 1.
 */
class BiRatFunc {
public:
    BiRatFunc() : den_(bi_const(Rational(1))) {}
    BiRatFunc(int c) : num_(bi_const(Rational(c))), den_(bi_const(Rational(1))) {}
    BiRatFunc(const Rational& c) : num_(bi_const(c)), den_(bi_const(Rational(1))) {}
    BiRatFunc(BiPoly num) : num_(std::move(num)), den_(bi_const(Rational(1))) {}
    BiRatFunc(BiPoly num, BiPoly den);

    static BiRatFunc x() { return BiRatFunc(bi_x()); }
    static BiRatFunc y() { return BiRatFunc(bi_y()); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return total_degree(den_) == 0; }

    BiRatFunc operator-() const;
    friend BiRatFunc operator+(const BiRatFunc& a, const BiRatFunc& b);
    friend BiRatFunc operator-(const BiRatFunc& a, const BiRatFunc& b);
    friend BiRatFunc operator*(const BiRatFunc& a, const BiRatFunc& b);
    friend BiRatFunc operator/(const BiRatFunc& a, const BiRatFunc& b);
    friend bool operator==(const BiRatFunc& a, const BiRatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const BiRatFunc& a, const BiRatFunc& b) { return !(a == b); }

    BiRatFunc dx() const;
    BiRatFunc dy() const;
    Rational eval(const Rational& x, const Rational& y) const;

private:
    BiPoly num_;
    BiPoly den_;
};

inline bool is_zero(const BiRatFunc& f) { return f.is_zero(); }
BiRatFunc pow(const BiRatFunc& f, int e);
std::string to_string(const BiRatFunc& f);
std::ostream& operator<<(std::ostream& os, const BiRatFunc& f);

}  // namespace poizat
