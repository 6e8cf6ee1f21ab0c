#include "poizat/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace poizat {

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}
Real::Real(const Rational& q, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}
Real::Real(long v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

namespace {
mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}
Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}
Real Real::sqrt() const {
    Real r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}
long Real::exponent10() const {
    if (mpfr_zero_p(v_)) return -1000000;
    return static_cast<long>(std::floor(static_cast<double>(mpfr_get_exp(v_)) * 0.30103));
}
std::string Real::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 16) * 3.3219280948873623)) + 32;
}

Real arg(const Complex& z) {
    const mpfr_prec_t bits = std::max(z.re.precision(), z.im.precision());
    Real r(bits);
    mpfr_atan2(r.get(), z.im.get(), z.re.get(), MPFR_RNDN);
    if (mpfr_sgn(r.get()) < 0) {
        Real tau(bits);
        mpfr_const_pi(tau.get(), MPFR_RNDN);
        mpfr_mul_2ui(tau.get(), tau.get(), 1, MPFR_RNDN);
        r = r + tau;
    }
    return r;
}

Complex eval_complex(const Poly<Rational>& p, const Complex& z) {
    const mpfr_prec_t bits = z.re.precision();
    Complex acc(bits);
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + Complex(Real(p[i], bits), Real(bits));
    return acc;
}

std::vector<Complex> numeric_roots(const Poly<Rational>& p, int digits) {
    const int n = p.degree();
    if (n < 1) return {};
    const mpfr_prec_t bits = bits_for_digits(digits);
    const Poly<Rational> dp = p.derivative();
    // Cauchy bound for the initial circle.
    Rational bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, Rational(abs(p[i] / p.lc())));
    Real radius = Real(bound + 1, bits);
    std::vector<Complex> z;
    for (int k = 0; k < n; ++k) {
        const double ang = 2 * M_PI * (k + 0.25) / n + 0.4;
        z.emplace_back(radius * Real(Rational(static_cast<long>(std::llround(std::cos(ang) * 1e9)), 1000000000L), bits),
                       radius * Real(Rational(static_cast<long>(std::llround(std::sin(ang) * 1e9)), 1000000000L), bits));
    }
    Real tol(Rational(1), bits);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(bits - 16), MPFR_RNDN);
    for (int iter = 0; iter < 2000; ++iter) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            Complex pv = eval_complex(p, z[static_cast<size_t>(i)]);
            Complex dv = eval_complex(dp, z[static_cast<size_t>(i)]);
            if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) continue;
            Complex ratio = pv / dv;
            Complex sum(bits);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                sum = sum + Complex(Real(Rational(1), bits), Real(bits)) / diff;
            }
            Complex one(Real(Rational(1), bits), Real(bits));
            Complex w = ratio / (one - ratio * sum);
            z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - w;
            Real scale = z[static_cast<size_t>(i)].abs() + Real(Rational(1), bits);
            if (w.abs() > tol * scale) done = false;
        }
        if (done) break;
    }
    return z;
}

std::optional<Rational> recognize_rational(const Real& x, long max_den, const Real& tol) {
    const mpfr_prec_t bits = x.precision();
    // Continued fraction expansion on the exact binary value of x.
    mpq_class exact;
    {
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
        exact = m;
        if (e > 0) mpz_mul_2exp(exact.get_num_mpz_t(), exact.get_num_mpz_t(), static_cast<unsigned long>(e));
        else mpz_mul_2exp(exact.get_den_mpz_t(), exact.get_den_mpz_t(), static_cast<unsigned long>(-e));
        exact.canonicalize();
    }
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    mpq_class rest = exact;
    std::optional<Rational> best;
    for (int it = 0; it < 200; ++it) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Rational cand(h1, k1);
        cand.canonicalize();
        Real diff = (Real(cand, bits) - x).abs();
        if (!(diff > tol)) {
            best = cand;
            break;
        }
        mpq_class frac = rest - mpq_class(a);
        if (sgn(frac) == 0) break;
        rest = 1 / frac;
    }
    return best;
}

}  // namespace poizat
