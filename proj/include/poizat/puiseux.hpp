#pragma once

#include <functional>
#include <string>
#include <vector>

#include "poizat/rational.hpp"

namespace poizat {

/**
 * Truncated Puiseux series in y with rational coefficients:
 *
 *   sum_{i < T} a_i y^((v + i)/m) + O(y^((v + T)/m))
 *
 * where m is the ramification, v the valuation numerator and T the
 * number of retained terms. Coefficients are exact below the precision
 * bound (v + T)/m and unknown from there on. A nonzero series keeps
 * a_0 != 0; a series with no known nonzero coefficient is stored with
 * T = 0 and v equal to its precision numerator.
 */
class PuiseuxSeries {
public:
    PuiseuxSeries(int m, long valuation_numerator, std::vector<Rational> coefficients);
    // c * y^e with `terms` retained terms at ramification den(e).
    static PuiseuxSeries monomial(const Rational& c, const Rational& e, int terms);

    int ramification() const { return m_; }
    long valuation_numerator() const { return v_; }
    Rational valuation() const;
    const std::vector<Rational>& coefficients() const { return a_; }
    int truncation() const { return static_cast<int>(a_.size()); }
    // Exponents below this bound are exact.
    Rational precision() const;
    bool is_zero() const { return a_.empty(); }

    // Throws AlgebraError("insufficient truncation") past the precision bound.
    Rational coefficient(const Rational& exponent) const;

    PuiseuxSeries ramify(int m) const;
    PuiseuxSeries truncate(int terms) const;
    // d/dy
    PuiseuxSeries derivative() const;
    PuiseuxSeries inverse() const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b.inverse(); }

private:
    void normalize();
    int m_;
    long v_;
    std::vector<Rational> a_;
};

std::string to_string(const PuiseuxSeries& s);

/**
 * delta(sum a_i y^e_i) = sum delta(a_i) y^e_i + (sum e_i a_i y^(e_i - 1)) * dy.
 * An empty coefficient_derivative is the zero map.
 */
struct PuiseuxDerivation {
    std::function<Rational(const Rational&)> coefficient_derivative;
    PuiseuxSeries dy;
};

// Relative precision drops to the smaller of u' and dy.
PuiseuxSeries apply_derivation(const PuiseuxDerivation& d, const PuiseuxSeries& u);

// Coefficient of y^-1 in delta(u)/u for the derivation with dy = u and constant coefficients.
Rational log_derivative_residue(const PuiseuxSeries& u);

}  // namespace poizat
