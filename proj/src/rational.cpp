#include "poizat/rational.hpp"

namespace poizat {

Rational make_rational(long num, long den) {
    if (den == 0) throw AlgebraError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (is_zero(q)) throw AlgebraError("zero to a negative power");
        return pow(Rational(1) / q, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::optional<Integer> integer_root(const Integer& z, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (sgn(z) < 0 && k % 2 == 0) return std::nullopt;
    Integer a = abs(z), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
    if (sgn(z) < 0) r = -r;
    return r;
}

std::optional<Rational> rational_root(const Rational& q, unsigned long k) {
    auto n = integer_root(q.get_num(), k);
    if (!n) return std::nullopt;
    auto d = integer_root(q.get_den(), k);
    if (!d) return std::nullopt;
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) { return rational_root(q, 2); }

CoeffText coeff_text(const Rational& q) {
    return CoeffText{to_string(q), true, sgn(q) < 0};
}

}  // namespace poizat
