#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "poizat/errors.hpp"
#include "poizat/rational.hpp"

namespace poizat {

namespace detail {
template <class F>
bool czero(const F& x) {
    return is_zero(x);
}
}  // namespace detail

/**
 * Dense univariate polynomial, coefficients stored lowest degree first.
 *
 * The coefficient type must behave like a commutative ring with unit, be
 * constructible from an int, and provide an `is_zero` overload found by
 * ordinary or argument-dependent lookup. Operations that divide by
 * coefficients additionally need a field.
 *
 * The coefficient vector never has trailing zeros, so the zero polynomial
 * is the empty vector and has degree -1.
 */
template <class F>
class Poly {
public:
    using coeff_type = F;

    Poly() = default;
    Poly(const F& c) {
        if (!detail::czero(c)) c_.push_back(c);
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const F& c, int deg) {
        if (detail::czero(c)) return Poly();
        std::vector<F> v(static_cast<size_t>(deg) + 1, F(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<size_t>(i)];
    }
    const F& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const F& lc() const {
        if (c_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<F>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::czero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const F& s, const Poly& p) {
        if (detail::czero(s)) return Poly();
        std::vector<F> v = p.c_;
        for (auto& x : v) x = s * x;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& p, const F& s) { return s * p; }
    friend Poly operator/(const Poly& p, const F& s) {
        if (detail::czero(s)) throw AlgebraError("polynomial divided by zero scalar");
        std::vector<F> v = p.c_;
        for (auto& x : v) x = x / s;
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> v(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = F(static_cast<int>(i)) * c_[i];
        return Poly(std::move(v));
    }

    // Horner evaluation in any ring T receiving F by construction.
    template <class T>
    T eval(const T& x) const {
        if (c_.empty()) return T(F(0));
        T acc = T(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }
    F operator()(const F& x) const { return eval<F>(x); }

    Poly compose(const Poly& g) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

    Poly shift_up(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<F> v(static_cast<size_t>(k), F(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    template <class G, class Fn>
    Poly<G> map(Fn fn) const {
        std::vector<G> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(fn(x));
        return Poly<G>(std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && detail::czero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
    return p.is_zero();
}

template <class F>
Poly<F> pow(const Poly<F>& p, int e) {
    if (e < 0) throw AlgebraError("negative polynomial power");
    Poly<F> r(F(1)), b = p;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

template <class F>
F field_pow(const F& x, int e) {
    if (e < 0) return F(1) / field_pow(x, -e);
    F r(1), b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw AlgebraError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1), F(0));
    const int db = b.degree();
    const F inv = F(1) / b.lc();
    for (int k = a.degree() - db; k >= 0; --k) {
        const F t = r[static_cast<size_t>(k + db)] * inv;
        q[static_cast<size_t>(k)] = t;
        if (is_zero(t)) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] = r[static_cast<size_t>(k + j)] - t * b[j];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw AlgebraError("inexact polynomial division");
    return q;
}

// lc(b)^(deg a - deg b + 1) * a mod b, using ring operations only.
template <class F>
Poly<F> pseudo_rem(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw AlgebraError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const int delta = a.degree() - b.degree();
    const F& lb = b.lc();
    Poly<F> r = a;
    int steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<F> t = Poly<F>::monomial(r.lc(), r.degree() - b.degree());
        r = lb * r - t * b;
        ++steps;
    }
    for (int i = steps; i < delta + 1; ++i) r = lb * r;
    return r;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p / p.lc();
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

// Modular algorithm over Q; preferred to the Euclidean template by overload resolution.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0(F(1)), s1, t0, t1(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F(1) / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

// Solves s*a + t*b = c with deg s < deg b. Requires gcd(a, b) | c.
template <class F>
std::pair<Poly<F>, Poly<F>> solve_bezout(const Poly<F>& a, const Poly<F>& b, const Poly<F>& c) {
    auto [g, s0, t0] = xgcd(a, b);
    auto [q, r] = divmod(c, g);
    if (!r.is_zero()) throw AlgebraError("bezout right-hand side not divisible by gcd");
    Poly<F> s = s0 * q;
    if (b.degree() > 0) s = divmod(s, b).second;
    Poly<F> t = exact_div(c - s * a, b);
    return {s, t};
}

/**
 * Yun's squarefree decomposition over a field of characteristic zero.
 * Returns pairs (factor, multiplicity) with monic, pairwise coprime,
 * squarefree factors whose product with multiplicities is p / lc(p).
 */
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decompose(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (p.degree() <= 0) return out;
    Poly<F> f = monic(p);
    Poly<F> fp = f.derivative();
    Poly<F> a = gcd(f, fp);
    Poly<F> b = exact_div(f, a);
    Poly<F> c = exact_div(fp, a);
    Poly<F> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly<F> ai = gcd(b, d);
        Poly<F> bn = exact_div(b, ai);
        Poly<F> cn = exact_div(d, ai);
        d = cn - bn.derivative();
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = std::move(bn);
        ++i;
    }
    return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.degree() <= 0) return Poly<F>(F(1));
    return exact_div(monic(p), gcd(p, p.derivative()));
}

template <class F>
bool is_squarefree(const Poly<F>& p) {
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

/**
 * Resultant by the subresultant pseudo-remainder sequence. Matches the
 * determinant of the Sylvester matrix, so res(a, b) = lc(a)^deg(b) prod b(alpha)
 * over the roots alpha of a. Exact divisions only; no fraction growth.
 */
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) return F(0);
    F s(1);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    }
    if (b.degree() == 0) return s * field_pow(b.lc(), a.degree());
    F g(1), h(1);
    for (;;) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        Poly<F> r = pseudo_rem(a, b);
        a = std::move(b);
        b = r / (g * field_pow(h, delta));
        if (b.is_zero()) return F(0);
        g = a.lc();
        if (delta > 0) h = field_pow(g, delta) / field_pow(h, delta - 1);
        if (b.degree() == 0) break;
    }
    const int da = a.degree();
    return s * (field_pow(b.lc(), da) / field_pow(h, da - 1));
}

// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p).
template <class F>
F discriminant(const Poly<F>& p) {
    const int n = p.degree();
    if (n < 1) throw AlgebraError("discriminant of a constant");
    F r = resultant(p, p.derivative()) / p.lc();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

inline std::string monomial_text(const std::string& var, int k) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

template <class F>
std::string to_string(const Poly<F>& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const F& c = p[k];
        if (is_zero(c)) continue;
        CoeffText ct = coeff_text(c);
        bool neg = ct.negative && !first;
        if (neg) ct = coeff_text(F(-c));
        std::string term;
        const std::string mono = monomial_text(var, k);
        if (k == 0) {
            term = (ct.atomic || (first && p.degree() == 0)) ? ct.text : "(" + ct.text + ")";
        } else if (ct.text == "1") {
            term = mono;
        } else if (ct.text == "-1") {
            term = "-" + mono;
        } else {
            term = (ct.atomic ? ct.text : "(" + ct.text + ")") + "*" + mono;
        }
        if (first) {
            out = term;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
        first = false;
    }
    return out;
}

// True when the printed form is a single factor needing no parentheses as a divisor.
template <class F>
bool is_bare_power(const Poly<F>& p) {
    if (p.is_zero()) return false;
    for (int i = 0; i < p.degree(); ++i)
        if (!is_zero(p[i])) return false;
    return p.lc() == F(1);
}

template <class F>
int term_count(const Poly<F>& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (!is_zero(c)) ++n;
    return n;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) {
    return os << to_string(p);
}

}  // namespace poizat
