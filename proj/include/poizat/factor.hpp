#pragma once

#include <utility>
#include <vector>

#include "poizat/poly.hpp"

namespace poizat {

// p = unit * prod factor^multiplicity, factors monic and irreducible over Q.
struct Factorization {
    Rational unit;
    std::vector<std::pair<Poly<Rational>, int>> factors;
};

// Zassenhaus: squarefree split, modular factorization, Hensel lifting, recombination.
Factorization factor(const Poly<Rational>& p);

std::vector<std::pair<Rational, int>> rational_roots(const Poly<Rational>& p);

// Integer coefficients with content 1 and positive leading coefficient.
Poly<Rational> primitive_integer(const Poly<Rational>& p);

Poly<Rational> cyclotomic(int n);

}  // namespace poizat
