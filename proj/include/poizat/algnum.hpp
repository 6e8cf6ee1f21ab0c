#pragma once

#include <memory>
#include <string>
#include <utility>

#include "poizat/ratfunc.hpp"

namespace poizat {

template <class K>
struct ExtensionContext {
    Poly<K> modulus;  // monic, irreducible over K
    std::string symbol;
};

/**
 * Element of the simple extension K[t]/(modulus).
 *
 * An element without a context is a plain member of K; it adopts the
 * context of whatever it is combined with. Mixing two different contexts
 * is an error.
 */
template <class K>
class AlgNum {
public:
    using Context = std::shared_ptr<const ExtensionContext<K>>;

    AlgNum() = default;
    AlgNum(int v) : rep_(K(v)) {}
    AlgNum(const K& v) : rep_(v) {}
    AlgNum(Context ctx, Poly<K> rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) { reduce(); }

    static Context make_context(const Poly<K>& modulus, std::string symbol) {
        if (modulus.degree() < 1) throw AlgebraError("extension modulus must be nonconstant");
        return std::make_shared<const ExtensionContext<K>>(ExtensionContext<K>{monic(modulus), std::move(symbol)});
    }
    static AlgNum generator(const Context& ctx) { return AlgNum(ctx, Poly<K>::variable()); }

    const Context& context() const { return ctx_; }
    const Poly<K>& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool in_base() const { return rep_.degree() <= 0; }
    K base_value() const {
        if (!in_base()) throw AlgebraError("extension element is not in the base field");
        return rep_.coeff(0);
    }

    AlgNum operator-() const { return AlgNum(ctx_, -rep_, raw_tag{}); }
    friend AlgNum operator+(const AlgNum& a, const AlgNum& b) { return AlgNum(join(a, b), a.rep_ + b.rep_, raw_tag{}); }
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b) { return AlgNum(join(a, b), a.rep_ - b.rep_, raw_tag{}); }
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b) { return AlgNum(join(a, b), a.rep_ * b.rep_); }
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
    friend bool operator==(const AlgNum& a, const AlgNum& b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && a.ctx_->modulus != b.ctx_->modulus)
            throw AlgebraError("comparison across different extensions");
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    AlgNum inverse() const {
        if (rep_.is_zero()) throw AlgebraError("inverse of zero");
        if (rep_.degree() == 0) return AlgNum(ctx_, Poly<K>(K(1) / rep_.lc()), raw_tag{});
        auto [g, s, t] = xgcd(rep_, ctx_->modulus);
        if (g.degree() != 0) throw AlgebraError("extension modulus is reducible");
        return AlgNum(ctx_, s, raw_tag{});
    }

private:
    struct raw_tag {};
    AlgNum(Context ctx, Poly<K> rep, raw_tag) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}
    static Context join(const AlgNum& a, const AlgNum& b) {
        if (!a.ctx_) return b.ctx_;
        if (!b.ctx_ || a.ctx_ == b.ctx_) return a.ctx_;
        if (a.ctx_->modulus == b.ctx_->modulus) return a.ctx_;
        throw AlgebraError("arithmetic across different extensions");
    }
    void reduce() {
        if (ctx_ && rep_.degree() >= ctx_->modulus.degree()) rep_ = divmod(rep_, ctx_->modulus).second;
        if (!ctx_ && rep_.degree() > 0) throw AlgebraError("extension element without context");
    }

    Context ctx_;
    Poly<K> rep_;
};

template <class K>
bool is_zero(const AlgNum<K>& a) {
    return a.is_zero();
}

template <class K>
std::string to_string(const AlgNum<K>& a) {
    if (a.in_base()) return coeff_text(a.rep().coeff(0)).text;
    return to_string(a.rep(), a.context()->symbol);
}

template <class K>
CoeffText coeff_text(const AlgNum<K>& a) {
    if (a.in_base()) return coeff_text(a.rep().coeff(0));
    std::string s = to_string(a);
    return CoeffText{s, term_count(a.rep()) == 1, s[0] == '-'};
}

template <class K>
Poly<AlgNum<K>> lift_poly(const Poly<K>& p) {
    return p.template map<AlgNum<K>>([](const K& x) { return AlgNum<K>(x); });
}

template <class K>
RatFunc<AlgNum<K>> lift_ratfunc(const RatFunc<K>& f) {
    return f.template map<AlgNum<K>>([](const K& x) { return AlgNum<K>(x); });
}

}  // namespace poizat
