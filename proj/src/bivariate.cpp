#include "poizat/bivariate.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "poizat/factor.hpp"

namespace poizat {

BiPoly bi_x() { return BiPoly(UPoly::variable()); }
BiPoly bi_y() { return BiPoly::monomial(UPoly(Rational(1)), 1); }
BiPoly bi_const(const Rational& c) { return BiPoly(UPoly(c)); }
BiPoly bi_monomial(const Rational& c, int i, int j) { return BiPoly::monomial(UPoly::monomial(c, i), j); }
BiPoly bi_from_x(const UPoly& p) { return BiPoly(p); }

Rational bi_coeff(const BiPoly& p, int i, int j) { return p.coeff(j).coeff(i); }

int total_degree(const BiPoly& p) {
    int d = -1;
    for (int j = 0; j <= p.degree(); ++j)
        if (!p[j].is_zero()) d = std::max(d, j + p[j].degree());
    return d;
}

BiPoly homogeneous_part(const BiPoly& p, int d) {
    BiPoly out;
    for (int j = 0; j <= p.degree() && j <= d; ++j) {
        Rational c = p[j].coeff(d - j);
        if (!is_zero(c)) out += bi_monomial(c, d - j, j);
    }
    return out;
}

BiPoly bi_dx(const BiPoly& p) { return p.map<UPoly>([](const UPoly& c) { return c.derivative(); }); }
BiPoly bi_dy(const BiPoly& p) { return p.derivative(); }

BiPoly bi_scale(const BiPoly& p, const Rational& c) {
    return p.map<UPoly>([&](const UPoly& u) { return c * u; });
}

Rational bi_eval(const BiPoly& p, const Rational& x, const Rational& y) {
    Rational acc = 0;
    for (int j = p.degree(); j >= 0; --j) acc = acc * y + p[j](x);
    return acc;
}

std::vector<std::tuple<int, int, Rational>> bi_terms(const BiPoly& p) {
    std::vector<std::tuple<int, int, Rational>> out;
    for (int j = 0; j <= p.degree(); ++j)
        for (int i = 0; i <= p[j].degree(); ++i)
            if (!is_zero(p[j][i])) out.emplace_back(i, j, p[j][i]);
    return out;
}

Rational bi_grlex_lc(const BiPoly& p) {
    int d = total_degree(p);
    if (d < 0) throw AlgebraError("leading coefficient of zero polynomial");
    for (int i = d; i >= 0; --i) {
        Rational c = bi_coeff(p, i, d - i);
        if (!is_zero(c)) return c;
    }
    throw AlgebraError("inconsistent total degree");
}

UPoly content_x(const BiPoly& p) {
    UPoly g;
    for (const auto& c : p.coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly primitive_part_x(const BiPoly& p) {
    if (p.is_zero()) return p;
    UPoly c = content_x(p);
    if (c.degree() == 0 && c.lc() == 1) return p;
    return p.map<UPoly>([&](const UPoly& u) { return exact_div(u, c); });
}

namespace {

bool try_exact_div(const BiPoly& a, const BiPoly& b, BiPoly& q) {
    if (b.is_zero()) throw AlgebraError("division by zero polynomial");
    q = BiPoly();
    BiPoly r = a;
    while (!r.is_zero()) {
        if (r.degree() < b.degree()) return false;
        auto [t, rem] = divmod(r.lc(), b.lc());
        if (!rem.is_zero()) return false;
        BiPoly term = BiPoly::monomial(t, r.degree() - b.degree());
        q += term;
        r -= term * b;
    }
    return true;
}

BiPoly normalize_unit(const BiPoly& p) {
    if (p.is_zero()) return p;
    Rational l = p.lc().lc();
    if (l == 1) return p;
    return bi_scale(p, Rational(1) / l);
}

}  // namespace

BiPoly bi_exact_div(const BiPoly& a, const BiPoly& b) {
    BiPoly q;
    if (!try_exact_div(a, b, q)) throw AlgebraError("inexact bivariate division");
    return q;
}

bool bi_divides(const BiPoly& b, const BiPoly& a) {
    BiPoly q;
    return try_exact_div(a, b, q);
}

namespace {

int x_degree(const BiPoly& p) {
    int d = -1;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
}

// p(x0, y) as a polynomial in y, or p(x, y0) as a polynomial in x.
UPoly at_x(const BiPoly& p, const Rational& x0) {
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) v.push_back(c(x0));
    return UPoly(v);
}
UPoly at_y(const BiPoly& p, const Rational& y0) {
    UPoly acc;
    for (int j = p.degree(); j >= 0; --j) acc = acc * UPoly(y0) + p[j];
    return acc;
}

UPoly lc_x(const BiPoly& p) {
    const int d = x_degree(p);
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) v.push_back(c.coeff(d));
    return UPoly(v);
}

// True when a specialization proves the gcd has degree 0 in y (resp. x).
bool coprime_in_y(const BiPoly& a, const BiPoly& b) {
    for (int x0 : {3, -5, 7, 11, -13}) {
        if (is_zero(a.lc()(x0)) || is_zero(b.lc()(x0))) continue;
        return gcd(at_x(a, x0), at_x(b, x0)).degree() == 0;
    }
    return false;
}
bool coprime_in_x(const BiPoly& a, const BiPoly& b) {
    const UPoly la = lc_x(a), lb = lc_x(b);
    for (int y0 : {2, -3, 5, 13, -17}) {
        if (is_zero(la(y0)) || is_zero(lb(y0))) continue;
        return gcd(at_y(a, y0), at_y(b, y0)).degree() == 0;
    }
    return false;
}

UPoly newton_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const size_t n = xs.size();
    std::vector<Rational> c = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - k]);
    UPoly p(c[n - 1]);
    for (size_t i = n - 1; i-- > 0;) p = p * UPoly(std::vector<Rational>{-xs[i], Rational(1)}) + UPoly(c[i]);
    return p;
}

// Gcd of primitive (in y) polynomials by evaluation at x = x0 and interpolation,
// with the leading coefficient in y fixed to gcd(lc(a), lc(b)).
std::optional<BiPoly> interpolated_gcd(const BiPoly& a, const BiPoly& b) {
    const UPoly gamma = gcd(a.lc(), b.lc());
    const int bound = std::min(x_degree(a), x_degree(b)) + gamma.degree();
    std::vector<Rational> xs;
    std::vector<UPoly> images;
    int best = std::min(a.degree(), b.degree()) + 1;
    for (long x0 = 1; x0 < 4 * (bound + best) + 64; ++x0) {
        const Rational q(x0);
        const Rational gq = gamma(q);
        if (is_zero(gq) || is_zero(a.lc()(q)) || is_zero(b.lc()(q))) continue;
        UPoly g = gcd(at_x(a, q), at_x(b, q));
        if (g.degree() == 0) return bi_const(Rational(1));
        if (g.degree() > best) continue;
        if (g.degree() < best) {
            best = g.degree();
            xs.clear();
            images.clear();
        }
        xs.push_back(q);
        images.push_back(gq * g);
        if (static_cast<int>(xs.size()) < bound + 1) continue;
        BiPoly cand;
        for (int j = 0; j <= best; ++j) {
            std::vector<Rational> vals;
            for (const auto& im : images) vals.push_back(im.coeff(j));
            cand += BiPoly::monomial(newton_interpolate(xs, vals), j);
        }
        cand = primitive_part_x(cand);
        if (bi_divides(cand, a) && bi_divides(cand, b)) return cand;
    }
    return std::nullopt;
}

}  // namespace

BiPoly bi_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (total_degree(a) == 0 || total_degree(b) == 0) return bi_const(Rational(1));
    const bool cy = coprime_in_y(a, b), cx = coprime_in_x(a, b);
    if (cy && cx) return bi_const(Rational(1));
    if (cy) return bi_from_x(gcd(content_x(a), content_x(b)));
    UPoly c = gcd(content_x(a), content_x(b));
    BiPoly A = primitive_part_x(a), B = primitive_part_x(b);
    if (A.degree() == 0 || B.degree() == 0) return normalize_unit(BiPoly(c));
    if (auto g = interpolated_gcd(A, B)) return normalize_unit(BiPoly(c) * *g);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero() && B.degree() > 0) {
        BiPoly R = pseudo_rem(A, B);
        A = std::move(B);
        B = R.is_zero() ? R : primitive_part_x(R);
    }
    BiPoly g = B.is_zero() ? primitive_part_x(A) : bi_const(Rational(1));
    return normalize_unit(BiPoly(c) * g);
}

namespace {

UPoly truncate(const UPoly& p, int k) {
    if (p.degree() < k) return p;
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().begin() + k);
    return UPoly(std::move(c));
}

BiPoly truncate(const BiPoly& p, int k) {
    return p.map<UPoly>([&](const UPoly& c) { return truncate(c, k); });
}

// Coefficient of x^j as a polynomial in y.
UPoly x_slice(const BiPoly& p, int j) {
    std::vector<Rational> c;
    for (const auto& u : p.coeffs()) c.push_back(u.coeff(j));
    return UPoly(std::move(c));
}

BiPoly from_slice(const UPoly& q, int j) {
    std::vector<UPoly> c;
    for (const auto& r : q.coeffs()) c.push_back(UPoly::monomial(r, j));
    return BiPoly(std::move(c));
}

BiPoly shift_x(const BiPoly& p, const Rational& x0) {
    UPoly s = UPoly::variable() + UPoly(x0);
    return p.map<UPoly>([&](const UPoly& c) { return c.compose(s); });
}

UPoly series_inverse(const UPoly& l, int k) {
    std::vector<Rational> inv(static_cast<size_t>(k), Rational(0));
    inv[0] = Rational(1) / l.coeff(0);
    for (int i = 1; i < k; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j) acc += l.coeff(j) * inv[static_cast<size_t>(i - j)];
        inv[static_cast<size_t>(i)] = -acc * inv[0];
    }
    return UPoly(std::move(inv));
}

std::vector<BiPoly> factor_squarefree_primitive(const BiPoly& g) {
    const int n = g.degree();
    if (n <= 1) return {normalize_unit(g)};
    Rational x0 = 0;
    for (int t = 0;; ++t) {
        x0 = Rational((t + 1) / 2) * (t % 2 == 0 ? -1 : 1);
        if (is_zero(g.lc()(x0))) continue;
        UPoly s = at_x(g, x0);
        if (s.degree() == n && gcd(s, s.derivative()).degree() == 0) break;
    }
    BiPoly G = shift_x(g, x0);
    Factorization uf = factor(at_x(G, Rational(0)));
    std::vector<UPoly> u;
    for (const auto& [q, e] : uf.factors) u.push_back(q);
    if (u.size() == 1) return {normalize_unit(g)};

    const int k = x_degree(G) + G.lc().degree() + 1;
    const UPoly linv = series_inverse(G.lc(), k);
    const BiPoly Gm = truncate(G * BiPoly(linv), k);

    const size_t r = u.size();
    std::vector<UPoly> inv(r);
    for (size_t i = 0; i < r; ++i) {
        UPoly w(Rational(1));
        for (size_t j = 0; j < r; ++j)
            if (j != i) w = w * u[j];
        auto [h, s, t] = xgcd(w, u[i]);
        inv[i] = s;
    }
    std::vector<BiPoly> U;
    for (const auto& q : u) U.push_back(BiPoly(q.map<UPoly>([](const Rational& c) { return UPoly(c); })));
    for (int j = 1; j < k; ++j) {
        BiPoly prod = bi_const(Rational(1));
        for (const auto& f : U) prod = truncate(prod * f, j + 1);
        UPoly e = x_slice(Gm - prod, j);
        if (e.is_zero()) continue;
        for (size_t i = 0; i < r; ++i) U[i] = U[i] + from_slice((e * inv[i]) % u[i], j);
    }

    std::vector<BiPoly> out;
    BiPoly rest = G;
    std::vector<BiPoly> pool = U;
    for (size_t size = 1; 2 * size <= pool.size();) {
        bool found = false;
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            BiPoly cand = BiPoly(rest.lc());
            for (size_t i : idx) cand = truncate(cand * pool[i], k);
            cand = primitive_part_x(cand);
            if (cand.degree() > 0 && bi_divides(cand, rest)) {
                out.push_back(cand);
                rest = bi_exact_div(rest, cand);
                std::vector<BiPoly> keep;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(pool[i]);
                pool = std::move(keep);
                found = true;
                break;
            }
            size_t i = size;
            while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rest.degree() > 0) out.push_back(primitive_part_x(rest));
    for (auto& f : out) f = normalize_unit(shift_x(f, -x0));
    return out;
}

}  // namespace

BiFactorization bi_factor(const BiPoly& p) {
    if (p.is_zero()) throw AlgebraError("factorization of zero");
    BiFactorization out;
    UPoly c = content_x(p);
    for (const auto& [q, e] : factor(c).factors) out.factors.emplace_back(bi_from_x(q), e);
    BiPoly pp = primitive_part_x(p);
    if (pp.degree() > 0) {
        int mult = 1;
        BiPoly f = pp;
        BiPoly d = bi_gcd(f, bi_dy(f));
        BiPoly w = bi_exact_div(f, d);
        while (w.degree() > 0) {
            BiPoly y = bi_gcd(w, d);
            BiPoly z = bi_exact_div(w, y);
            if (z.degree() > 0)
                for (auto& q : factor_squarefree_primitive(primitive_part_x(z))) out.factors.emplace_back(q, mult);
            w = y;
            d = bi_exact_div(d, y);
            ++mult;
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return to_string(a.first) < to_string(b.first);
    });
    BiPoly prod = bi_const(Rational(1));
    for (const auto& [q, e] : out.factors) prod = prod * pow(q, e);
    out.unit = bi_exact_div(p, prod).lc().lc();
    return out;
}

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    // graded lex, highest first
    std::string out;
    bool first = true;
    for (int d = total_degree(p); d >= 0; --d) {
        for (int i = d; i >= 0; --i) {
            const int j = d - i;
            Rational c = bi_coeff(p, i, j);
            if (is_zero(c)) continue;
            bool neg = sgn(c) < 0 && !first;
            if (neg) c = -c;
            std::string mono;
            if (i > 0) mono = monomial_text("x", i);
            if (j > 0) mono += (mono.empty() ? "" : "*") + monomial_text("y", j);
            std::string term;
            if (mono.empty()) term = to_string(c);
            else if (c == 1) term = mono;
            else if (c == -1) term = "-" + mono;
            else term = to_string(c) + "*" + mono;
            out += first ? term : (neg ? " - " : " + ") + term;
            first = false;
        }
    }
    return out;
}

BiRatFunc::BiRatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw AlgebraError("zero denominator");
    if (num_.is_zero()) {
        den_ = bi_const(Rational(1));
        return;
    }
    if (total_degree(den_) > 0) {
        BiPoly g = bi_gcd(num_, den_);
        if (total_degree(g) > 0) {
            num_ = bi_exact_div(num_, g);
            den_ = bi_exact_div(den_, g);
        }
    }
    Rational l = den_.lc().lc();
    if (l != 1) {
        num_ = bi_scale(num_, Rational(1) / l);
        den_ = bi_scale(den_, Rational(1) / l);
    }
}

BiRatFunc BiRatFunc::operator-() const { return BiRatFunc(-num_, den_); }

BiRatFunc operator+(const BiRatFunc& a, const BiRatFunc& b) {
    if (a.den_ == b.den_) return BiRatFunc(a.num_ + b.num_, a.den_);
    return BiRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
BiRatFunc operator-(const BiRatFunc& a, const BiRatFunc& b) { return a + (-b); }
BiRatFunc operator*(const BiRatFunc& a, const BiRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return BiRatFunc();
    return BiRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
BiRatFunc operator/(const BiRatFunc& a, const BiRatFunc& b) {
    if (b.is_zero()) throw AlgebraError("rational function divided by zero");
    return BiRatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

BiRatFunc BiRatFunc::dx() const {
    return BiRatFunc(bi_dx(num_) * den_ - num_ * bi_dx(den_), den_ * den_);
}
BiRatFunc BiRatFunc::dy() const {
    return BiRatFunc(bi_dy(num_) * den_ - num_ * bi_dy(den_), den_ * den_);
}

Rational BiRatFunc::eval(const Rational& x, const Rational& y) const {
    Rational d = bi_eval(den_, x, y);
    if (poizat::is_zero(d)) throw AlgebraError("evaluation at a pole");
    return bi_eval(num_, x, y) / d;
}

BiRatFunc pow(const BiRatFunc& f, int e) {
    if (e < 0) return BiRatFunc(1) / pow(f, -e);
    return BiRatFunc(pow(f.num(), e), pow(f.den(), e));
}

std::string to_string(const BiRatFunc& f) {
    std::string n = to_string(f.num());
    if (f.is_polynomial()) return n;
    if (bi_terms(f.num()).size() > 1) n = "(" + n + ")";
    std::string d = to_string(f.den());
    auto dt = bi_terms(f.den());
    bool bare = dt.size() == 1 && std::get<2>(dt[0]) == 1 && (std::get<0>(dt[0]) == 0 || std::get<1>(dt[0]) == 0);
    if (!bare) d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const BiRatFunc& f) { return os << to_string(f); }

}  // namespace poizat
