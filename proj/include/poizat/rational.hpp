#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "poizat/errors.hpp"

namespace poizat {

// Canonical rationals: gmp keeps gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational pow(const Rational& q, long e);

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);
std::optional<Integer> integer_root(const Integer& z, unsigned long k);
std::optional<Rational> rational_root(const Rational& q, unsigned long k);

// Coefficient formatting hooks used by polynomial printers.
struct CoeffText {
    std::string text;
    bool atomic;    // safe to juxtapose with "*var" without parentheses
    bool negative;  // text carries a leading minus that can become a binary minus
};
CoeffText coeff_text(const Rational& q);

}  // namespace poizat
