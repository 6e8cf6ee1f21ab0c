#include "poizat/forms.hpp"

#include <stdexcept>

namespace poizat {

DifferentialForm DifferentialForm::zero(int degree) {
    if (degree < 0 || degree > 2) throw std::invalid_argument("form degree must be 0, 1 or 2");
    DifferentialForm u;
    u.degree = degree;
    return u;
}
DifferentialForm DifferentialForm::function(const BiRatFunc& h) { return DifferentialForm{0, h, BiRatFunc()}; }
DifferentialForm DifferentialForm::one_form(const BiRatFunc& p, const BiRatFunc& q) { return DifferentialForm{1, p, q}; }
DifferentialForm DifferentialForm::two_form(const BiRatFunc& r) { return DifferentialForm{2, r, BiRatFunc()}; }

namespace {
void same_degree(const DifferentialForm& u, const DifferentialForm& v) {
    if (u.degree != v.degree) throw std::invalid_argument("adding forms of different degrees");
}
}  // namespace

DifferentialForm operator+(const DifferentialForm& u, const DifferentialForm& v) {
    same_degree(u, v);
    return DifferentialForm{u.degree, u.a + v.a, u.b + v.b};
}
DifferentialForm operator-(const DifferentialForm& u, const DifferentialForm& v) {
    same_degree(u, v);
    return DifferentialForm{u.degree, u.a - v.a, u.b - v.b};
}
DifferentialForm operator-(const DifferentialForm& u) { return DifferentialForm{u.degree, -u.a, -u.b}; }
DifferentialForm operator*(const BiRatFunc& h, const DifferentialForm& u) {
    return DifferentialForm{u.degree, h * u.a, h * u.b};
}

PlanarDerivation operator*(const BiRatFunc& h, const PlanarDerivation& D) {
    return PlanarDerivation{h * D.dx_image, h * D.dy_image};
}

DifferentialForm wedge(const DifferentialForm& u, const DifferentialForm& v) {
    const int deg = u.degree + v.degree;
    if (deg > 2) return DifferentialForm::zero(2);
    if (u.degree == 0) return u.a * v;
    if (v.degree == 0) return v.a * u;
    // (p dx + q dy) ^ (r dx + s dy) = (p s - q r) dx^dy
    return DifferentialForm::two_form(u.a * v.b - u.b * v.a);
}

DifferentialForm exterior_d(const DifferentialForm& u) {
    switch (u.degree) {
        case 0: return DifferentialForm::one_form(u.a.dx(), u.a.dy());
        case 1: return DifferentialForm::two_form(u.b.dx() - u.a.dy());
        default: return DifferentialForm::zero(2);
    }
}

DifferentialForm interior_product(const PlanarDerivation& D, const DifferentialForm& u) {
    switch (u.degree) {
        case 0: return DifferentialForm::zero(0);
        case 1: return DifferentialForm::function(u.a * D.dx_image + u.b * D.dy_image);
        // i_D(dx^dy) = i_D(dx) dy - dx i_D(dy)
        default: return DifferentialForm::one_form(-(u.a * D.dy_image), u.a * D.dx_image);
    }
}

DifferentialForm lie_derivative(const PlanarDerivation& D, const DifferentialForm& u) {
    DifferentialForm first = interior_product(D, exterior_d(u));
    if (u.degree == 0) return first;
    DifferentialForm second = exterior_d(interior_product(D, u));
    if (u.degree == 2) return second;
    return first + second;
}

BiRatFunc in_x(const RatFunc<Rational>& f) { return BiRatFunc(bi_from_x(f.num()), bi_from_x(f.den())); }

PlanarDerivation derivation_from_poizat(const RatFunc<Rational>& f) {
    const BiRatFunc y = BiRatFunc::y();
    return PlanarDerivation{y, y * in_x(f)};
}

bool preserves(const RatFunc<Rational>& f, const DifferentialForm& omega) {
    return lie_derivative(derivation_from_poizat(f), omega).is_zero();
}

bool check_invariant_volume(const RatFunc<Rational>& f) {
    return preserves(f, DifferentialForm::two_form(BiRatFunc(1) / BiRatFunc::y()));
}

namespace {
std::string scaled(const BiRatFunc& c, const std::string& basis) {
    if (c == BiRatFunc(1)) return basis;
    if (c == BiRatFunc(-1)) return "-" + basis;
    std::string s = to_string(c);
    bool wrap = c.is_polynomial() ? bi_terms(c.num()).size() > 1 : true;
    return (wrap ? "(" + s + ")" : s) + "*" + basis;
}
}  // namespace

std::string to_string(const DifferentialForm& u) {
    switch (u.degree) {
        case 0: return to_string(u.a);
        case 1: {
            if (u.is_zero()) return "0";
            std::string out;
            if (!u.a.is_zero()) out = scaled(u.a, "dx");
            if (!u.b.is_zero()) {
                std::string t = scaled(u.b, "dy");
                if (out.empty()) out = t;
                else if (t[0] == '-') out += " - " + t.substr(1);
                else out += " + " + t;
            }
            return out;
        }
        default: return u.a.is_zero() ? "0" : scaled(u.a, "dx^dy");
    }
}

std::ostream& operator<<(std::ostream& os, const DifferentialForm& u) { return os << to_string(u); }

}  // namespace poizat
