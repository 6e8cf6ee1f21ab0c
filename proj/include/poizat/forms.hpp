#pragma once

#include <ostream>
#include <string>

#include "poizat/bivariate.hpp"
#include "poizat/ratfunc.hpp"

namespace poizat {

/**
 * Rational differential form on the plane.
 *
 * degree 0: a = h
 * degree 1: a*dx + b*dy
 * degree 2: a*dx^dy
 */
struct DifferentialForm {
    int degree = 0;
    BiRatFunc a;
    BiRatFunc b;

    static DifferentialForm zero(int degree);
    static DifferentialForm function(const BiRatFunc& h);
    static DifferentialForm one_form(const BiRatFunc& p, const BiRatFunc& q);
    static DifferentialForm two_form(const BiRatFunc& r);
    static DifferentialForm dx() { return one_form(BiRatFunc(1), BiRatFunc()); }
    static DifferentialForm dy() { return one_form(BiRatFunc(), BiRatFunc(1)); }
    static DifferentialForm volume() { return two_form(BiRatFunc(1)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const DifferentialForm& u, const DifferentialForm& v) {
        return u.degree == v.degree && u.a == v.a && u.b == v.b;
    }
    friend bool operator!=(const DifferentialForm& u, const DifferentialForm& v) { return !(u == v); }
};

DifferentialForm operator+(const DifferentialForm& u, const DifferentialForm& v);
DifferentialForm operator-(const DifferentialForm& u, const DifferentialForm& v);
DifferentialForm operator-(const DifferentialForm& u);
DifferentialForm operator*(const BiRatFunc& h, const DifferentialForm& u);

struct PlanarDerivation {
    BiRatFunc dx_image;
    BiRatFunc dy_image;

    BiRatFunc operator()(const BiRatFunc& h) const { return dx_image * h.dx() + dy_image * h.dy(); }
};

PlanarDerivation operator*(const BiRatFunc& h, const PlanarDerivation& D);

DifferentialForm wedge(const DifferentialForm& u, const DifferentialForm& v);
DifferentialForm exterior_d(const DifferentialForm& u);
DifferentialForm interior_product(const PlanarDerivation& D, const DifferentialForm& u);
DifferentialForm lie_derivative(const PlanarDerivation& D, const DifferentialForm& u);

BiRatFunc in_x(const RatFunc<Rational>& f);
// x' = y, y' = y f(x)
PlanarDerivation derivation_from_poizat(const RatFunc<Rational>& f);
bool check_invariant_volume(const RatFunc<Rational>& f);
// L_D(omega) = 0 for D = derivation_from_poizat(f)
bool preserves(const RatFunc<Rational>& f, const DifferentialForm& omega);

std::string to_string(const DifferentialForm& u);
std::ostream& operator<<(std::ostream& os, const DifferentialForm& u);

}  // namespace poizat
