#include "poizat/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "poizat/errors.hpp"

namespace poizat {

namespace {

std::pair<PuiseuxSeries, PuiseuxSeries> common(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const int m = std::lcm(a.ramification(), b.ramification());
    return {a.ramify(m), b.ramify(m)};
}

long to_long(const Integer& z) { return z.get_si(); }

}  // namespace

PuiseuxSeries::PuiseuxSeries(int m, long valuation_numerator, std::vector<Rational> coefficients)
    : m_(m), v_(valuation_numerator), a_(std::move(coefficients)) {
    if (m < 1) throw PreconditionError("ramification must be positive");
    normalize();
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, const Rational& e, int terms) {
    if (terms < 1) throw PreconditionError("at least one term is required");
    std::vector<Rational> a(static_cast<size_t>(terms), Rational(0));
    a[0] = c;
    return PuiseuxSeries(static_cast<int>(to_long(e.get_den())), to_long(e.get_num()), std::move(a));
}

void PuiseuxSeries::normalize() {
    size_t k = 0;
    while (k < a_.size() && a_[k] == 0) ++k;
    if (k == 0) return;
    v_ += static_cast<long>(k);
    a_.erase(a_.begin(), a_.begin() + static_cast<long>(k));
}

Rational PuiseuxSeries::valuation() const {
    if (is_zero()) throw AlgebraError("valuation of a zero series");
    return make_rational(v_, m_);
}

Rational PuiseuxSeries::precision() const { return make_rational(v_ + static_cast<long>(a_.size()), m_); }

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
    if (exponent >= precision()) throw AlgebraError("insufficient truncation");
    Rational k = exponent * m_;
    if (k.get_den() != 1) return Rational(0);
    long i = to_long(k.get_num()) - v_;
    if (i < 0) return Rational(0);
    return a_[static_cast<size_t>(i)];
}

PuiseuxSeries PuiseuxSeries::ramify(int m) const {
    if (m % m_ != 0) throw PreconditionError("ramification must be a multiple of the current one");
    const int k = m / m_;
    if (k == 1) return *this;
    std::vector<Rational> a(a_.size() * static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < a_.size(); ++i) a[i * static_cast<size_t>(k)] = a_[i];
    PuiseuxSeries out(*this);
    out.m_ = m;
    out.v_ = v_ * k;
    out.a_ = std::move(a);
    return out;
}

PuiseuxSeries PuiseuxSeries::truncate(int terms) const {
    if (terms < 0) throw PreconditionError("negative truncation");
    if (static_cast<size_t>(terms) >= a_.size()) return *this;
    return PuiseuxSeries(m_, v_, std::vector<Rational>(a_.begin(), a_.begin() + terms));
}

PuiseuxSeries PuiseuxSeries::derivative() const {
    std::vector<Rational> a(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) a[i] = a_[i] * make_rational(v_ + static_cast<long>(i), m_);
    return PuiseuxSeries(m_, v_ - m_, std::move(a));
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (is_zero()) throw AlgebraError("cannot invert a zero series");
    const size_t n = a_.size();
    std::vector<Rational> b(n);
    const Rational inv0 = Rational(1) / a_[0];
    b[0] = inv0;
    for (size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (size_t j = 1; j <= k; ++j) s += a_[j] * b[k - j];
        b[k] = -s * inv0;
    }
    return PuiseuxSeries(m_, -v_, std::move(b));
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries out(*this);
    for (auto& c : out.a_) c = -c;
    return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    auto [a, b] = common(x, y);
    const long prec = std::min(a.v_ + static_cast<long>(a.a_.size()), b.v_ + static_cast<long>(b.a_.size()));
    const long start = std::min(a.v_, b.v_);
    if (prec <= start) return PuiseuxSeries(a.m_, prec, {});
    std::vector<Rational> c(static_cast<size_t>(prec - start), Rational(0));
    for (size_t i = 0; i < a.a_.size() && a.v_ + static_cast<long>(i) < prec; ++i)
        c[static_cast<size_t>(a.v_ - start) + i] += a.a_[i];
    for (size_t i = 0; i < b.a_.size() && b.v_ + static_cast<long>(i) < prec; ++i)
        c[static_cast<size_t>(b.v_ - start) + i] += b.a_[i];
    return PuiseuxSeries(a.m_, start, std::move(c));
}

PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    auto [a, b] = common(x, y);
    const size_t n = std::min(a.a_.size(), b.a_.size());
    std::vector<Rational> c(n, Rational(0));
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i <= k; ++i) c[k] += a.a_[i] * b.a_[k - i];
    return PuiseuxSeries(a.m_, a.v_ + b.v_, std::move(c));
}

std::string to_string(const PuiseuxSeries& s) {
    std::ostringstream os;
    auto exponent = [&](long num) {
        const Rational e = make_rational(num, s.ramification());
        std::string t = to_string(e);
        return e.get_den() == 1 && e >= 0 ? t : "(" + t + ")";
    };
    bool first = true;
    for (size_t i = 0; i < s.coefficients().size(); ++i) {
        Rational c = s.coefficients()[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        const long num = s.valuation_numerator() + static_cast<long>(i);
        if (num == 0) os << to_string(c);
        else {
            if (c != 1) os << to_string(c) << "*";
            os << "y";
            if (num != s.ramification()) os << "^" << exponent(num);
        }
        first = false;
    }
    if (!first) os << " + ";
    os << "O(y^" << exponent(s.valuation_numerator() + s.truncation()) << ")";
    return os.str();
}

PuiseuxSeries apply_derivation(const PuiseuxDerivation& d, const PuiseuxSeries& u) {
    PuiseuxSeries out = u.derivative() * d.dy;
    if (d.coefficient_derivative) {
        std::vector<Rational> a;
        for (const auto& c : u.coefficients()) a.push_back(d.coefficient_derivative(c));
        out = out + PuiseuxSeries(u.ramification(), u.valuation_numerator(), std::move(a));
    }
    return out;
}

Rational log_derivative_residue(const PuiseuxSeries& u) {
    if (u.is_zero()) throw PreconditionError("log derivative of a zero series");
    PuiseuxDerivation d{nullptr, u};
    return (apply_derivation(d, u) / u).coefficient(Rational(-1));
}

}  // namespace poizat
