#pragma once

#include <random>
#include <vector>

#include "poizat/ratfunc.hpp"

namespace testsupport {

using poizat::Poly;
using poizat::Rational;
using poizat::RatFunc;

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> n(-range, range), d(1, den_range);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

inline Poly<Rational> random_poly(std::mt19937_64& rng, int max_deg, int range = 9, bool nonzero = true) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (;;) {
        std::vector<Rational> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, range));
        Poly<Rational> p(c);
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline RatFunc<Rational> random_ratfunc(std::mt19937_64& rng, int max_deg) {
    Poly<Rational> d = random_poly(rng, max_deg);
    return RatFunc<Rational>(random_poly(rng, max_deg, 9, false), d);
}

// Determinant by Gaussian elimination over a field; independent of the PRS code.
template <class F>
F determinant(std::vector<std::vector<F>> m) {
    const size_t n = m.size();
    F det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && poizat::is_zero(m[piv][col])) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (poizat::is_zero(m[r][col])) continue;
            F f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

template <class F>
F sylvester_resultant(const Poly<F>& a, const Poly<F>& b) {
    const int m = a.degree(), n = b.degree();
    const int size = m + n;
    if (size == 0) return F(1);
    std::vector<std::vector<F>> s(static_cast<size_t>(size), std::vector<F>(static_cast<size_t>(size), F(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = b[n - i];
    return determinant(s);
}

inline Poly<Rational> P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return Poly<Rational>(v);
}

}  // namespace testsupport
