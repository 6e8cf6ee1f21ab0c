#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "poizat/poly.hpp"

namespace poizat {

// MPFR float carrying its own precision; results take the larger operand precision.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 64);
    Real(const Rational& q, mpfr_prec_t bits);
    Real(long v, mpfr_prec_t bits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }

    Real abs() const;
    Real sqrt() const;
    long exponent10() const;  // rough decimal exponent; very negative for zero
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

private:
    mpfr_t v_;
};

struct Complex {
    Real re;
    Real im;
    explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Real norm() const { return re * re + im * im; }
    Real abs() const { return norm().sqrt(); }
};

mpfr_prec_t bits_for_digits(int digits);

// Argument in [0, 2*pi).
Real arg(const Complex& z);

Complex eval_complex(const Poly<Rational>& p, const Complex& z);

// All complex roots of a squarefree polynomial (Aberth iteration), accurate to about `digits` digits.
std::vector<Complex> numeric_roots(const Poly<Rational>& p, int digits);

// Best rational approximation with denominator <= max_den, accepted only within tol.
std::optional<Rational> recognize_rational(const Real& x, long max_den, const Real& tol);

}  // namespace poizat
