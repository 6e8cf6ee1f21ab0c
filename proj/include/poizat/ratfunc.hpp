#pragma once

#include <string>
#include <utility>

#include "poizat/poly.hpp"

namespace poizat {

/**
 * Reduced univariate rational function num/den over a field F.
 *
 * Invariants: gcd(num, den) = 1, den is monic and nonzero. The zero
 * function is 0/1. Every constructor and operation restores them, so two
 * equal functions have identical representations.
 */
template <class F>
class RatFunc {
public:
    RatFunc() : den_(F(1)) {}
    explicit RatFunc(const F& c) : num_(c), den_(F(1)) {}
    RatFunc(Poly<F> num) : num_(std::move(num)), den_(F(1)) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc variable() { return RatFunc(Poly<F>::variable()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    bool is_proper() const { return num_.degree() < den_.degree(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw AlgebraError("rational function divided by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator*(const F& s, const RatFunc& a) { return RatFunc(s * a.num_, a.den_, raw_tag{}); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Value at x; throws when x is a pole.
    F eval(const F& x) const {
        F d = den_(x);
        if (detail::czero(d)) throw AlgebraError("evaluation at a pole");
        return num_(x) / d;
    }

    // f(a*z + b).
    RatFunc compose_affine(const F& a, const F& b) const {
        Poly<F> lin(std::vector<F>{b, a});
        return RatFunc(num_.compose(lin), den_.compose(lin));
    }
    RatFunc compose(const Poly<F>& g) const { return RatFunc(num_.compose(g), den_.compose(g)); }

    // Polynomial part and proper remainder: f = q + r/den.
    std::pair<Poly<F>, RatFunc> split_polynomial() const {
        auto [q, r] = divmod(num_, den_);
        return {q, RatFunc(r, den_, raw_tag{})};
    }

    template <class G, class Fn>
    RatFunc<G> map(Fn fn) const {
        return RatFunc<G>(num_.template map<G>(fn), den_.template map<G>(fn));
    }

private:
    struct raw_tag {};
    RatFunc(Poly<F> num, Poly<F> den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) den_ = Poly<F>(F(1));
    }
    void normalize() {
        if (den_.is_zero()) throw AlgebraError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        if (den_.degree() > 0 && num_.degree() >= 0) {
            Poly<F> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        F l = den_.lc();
        if (!(l == F(1))) {
            num_ = num_ / l;
            den_ = den_ / l;
        }
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <class F>
bool is_zero(const RatFunc<F>& r) {
    return r.is_zero();
}

template <class F>
RatFunc<F> pow(const RatFunc<F>& r, int e) {
    if (e < 0) return RatFunc<F>(Poly<F>(F(1))) / pow(r, -e);
    return RatFunc<F>(pow(r.num(), e), pow(r.den(), e));
}

template <class F>
std::string to_string(const RatFunc<F>& r, const std::string& var = "z") {
    std::string n = to_string(r.num(), var);
    if (r.is_polynomial()) return n;
    if (term_count(r.num()) > 1) n = "(" + n + ")";
    std::string d = to_string(r.den(), var);
    if (!is_bare_power(r.den())) d = "(" + d + ")";
    return n + "/" + d;
}

/**
 * Elements of Q(c), the field generated by one transcendental parameter.
 * Printing uses the symbol c.
 */
class ParamField {
public:
    ParamField() = default;
    ParamField(int v) : v_(Poly<Rational>(Rational(v))) {}
    ParamField(const Rational& q) : v_(Poly<Rational>(q)) {}
    explicit ParamField(RatFunc<Rational> v) : v_(std::move(v)) {}

    static ParamField c() { return ParamField(RatFunc<Rational>::variable()); }

    const RatFunc<Rational>& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_constant() const { return v_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw AlgebraError("parameter-dependent value is not a constant");
        return v_.num().coeff(0);
    }
    Rational eval(const Rational& c0) const { return v_.eval(c0); }

    ParamField operator-() const { return ParamField(-v_); }
    friend ParamField operator+(const ParamField& a, const ParamField& b) { return ParamField(a.v_ + b.v_); }
    friend ParamField operator-(const ParamField& a, const ParamField& b) { return ParamField(a.v_ - b.v_); }
    friend ParamField operator*(const ParamField& a, const ParamField& b) { return ParamField(a.v_ * b.v_); }
    friend ParamField operator/(const ParamField& a, const ParamField& b) { return ParamField(a.v_ / b.v_); }
    friend bool operator==(const ParamField& a, const ParamField& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ParamField& a, const ParamField& b) { return !(a == b); }

private:
    RatFunc<Rational> v_;
};

inline bool is_zero(const ParamField& p) { return p.is_zero(); }
inline std::string to_string(const ParamField& p) { return to_string(p.value(), "c"); }
inline CoeffText coeff_text(const ParamField& p) {
    const auto& v = p.value();
    if (v.is_constant()) return coeff_text(v.num().coeff(0));
    std::string s = to_string(p);
    bool atomic = !(v.is_polynomial() && term_count(v.num()) > 1);
    return CoeffText{s, atomic, s[0] == '-'};
}

// Embeds a rational function with rational coefficients into Q(c)(z).
inline RatFunc<ParamField> to_param(const RatFunc<Rational>& f) {
    return f.map<ParamField>([](const Rational& q) { return ParamField(q); });
}

// Specializes c to a rational value; throws if a coefficient has a pole there.
inline RatFunc<Rational> specialize(const RatFunc<ParamField>& f, const Rational& c0) {
    auto ev = [&](const ParamField& p) { return p.eval(c0); };
    Poly<Rational> n = f.num().map<Rational>(ev), d = f.den().map<Rational>(ev);
    if (d.is_zero()) throw AlgebraError("specialization annihilates the denominator");
    return RatFunc<Rational>(n, d);
}

template <class F>
std::ostream& operator<<(std::ostream& os, const RatFunc<F>& r) {
    return os << to_string(r);
}
inline std::ostream& operator<<(std::ostream& os, const ParamField& p) { return os << to_string(p); }

}  // namespace poizat
